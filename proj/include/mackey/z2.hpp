#pragma once

#include <cstdint>
#include <optional>

#include "mackey/group.hpp"
#include "mackey/ktheory.hpp"

namespace mackey {

/// Orbit data of a nonnormal order-2 subgroup acting on G/H, plus the
/// derived quantities that control the K-theory closed forms.
struct Z2Profile {
  std::int64_t r = 0;   // fixed points = [Z_G(H) : H]
  std::int64_t q = 0;   // 2-element orbits
  std::int64_t p = 0;   // r + q - 1
  std::int64_t d = 0;   // p^2 - q^2
  std::int64_t a = 0;   // gcd(p, q)
  std::int64_t u = 0;   // p / a
  std::int64_t v = 0;   // q / a
  std::int64_t g = 0;   // u^2 - v^2
  std::int64_t z = 0;   // z*u + w*v = 1, |z| minimal
  std::int64_t w = 0;
  std::optional<std::int64_t> m;  // 2q / r when integral
};

/// Requires |H| = 2 and H nonnormal; both counting routes (orbits and
/// centralizer index) are computed and must agree.
Z2Profile z2_profile(const GroupPtr& g, const Subgroup& h);

/// Closed-form profile arithmetic for a given (r, q) without a group.
Z2Profile z2_profile_values(std::int64_t r, std::int64_t q);

struct RealizedPair {
  GroupPtr group;
  Subgroup subgroup;  // the designated Z_2
};

/// A pair (r, q) of positive integers arises iff r | 2q; the witnesses are
/// Z_r x (Z_{m+1} x| Z_2) for m = 2q/r even and Z_{r/2} x (Z_{2(m+1)} x| Z_2)
/// for m odd. Throws NotRealizable when r does not divide 2q.
RealizedPair realize(std::int64_t r, std::int64_t q);

/// K-theory of the (r, q) family without going through a graph:
/// r = 1 gives (Z_q + Z, Z, (1, 0)); r > 1 with p, q coprime gives
/// (Z_d, 0, p - q); otherwise (Z_a + Z_{ag}, 0, (z + w, u - v)).
/// Identity classes are reported in the same canonical form as the
/// pipeline's.
KTheoryInvariants closed_form_ktheory(std::int64_t r, std::int64_t q);

}  // namespace mackey
