#include "mackey/z2.hpp"

#include <cstdlib>
#include <numeric>

namespace mackey {

Z2Profile z2_profile_values(std::int64_t r, std::int64_t q) {
  if (r < 1 || q < 1) throw ValidationError("z2 profile needs r, q >= 1");
  Z2Profile prof;
  prof.r = r;
  prof.q = q;
  prof.p = r + q - 1;
  prof.d = prof.p * prof.p - q * q;
  prof.a = std::gcd(prof.p, q);
  prof.u = prof.p / prof.a;
  prof.v = q / prof.a;
  prof.g = prof.u * prof.u - prof.v * prof.v;
  ExtGcd eg = ext_gcd(Zint(static_cast<long long>(prof.u)),
                      Zint(static_cast<long long>(prof.v)));
  // all Bezout pairs are (z0 + k v, w0 - k u); take minimal |z|, ties positive
  std::int64_t bestz = eg.x.to_int64(), bestw = eg.y.to_int64();
  const std::int64_t k0 = -(bestz / prof.v);
  for (std::int64_t k : {k0 - 1, k0, k0 + 1}) {
    std::int64_t zc = eg.x.to_int64() + k * prof.v;
    std::int64_t wc = eg.y.to_int64() - k * prof.u;
    if (std::abs(zc) < std::abs(bestz) ||
        (std::abs(zc) == std::abs(bestz) && zc > bestz)) {
      bestz = zc;
      bestw = wc;
    }
  }
  prof.z = bestz;
  prof.w = bestw;
  if ((2 * q) % r == 0) prof.m = 2 * q / r;
  return prof;
}

Z2Profile z2_profile(const GroupPtr& g, const Subgroup& h) {
  if (h.members.size() != 2) {
    throw ValidationError("z2 profile requires |H| = 2");
  }
  if (is_normal(g, h)) {
    throw ValidationError("z2 profile requires H nonnormal (use the central rule instead)");
  }
  CosetSpace cs = left_cosets(g, h);
  CosetOrbits orbits = orbits_on_cosets(g, h, cs);
  if (orbits.larger_orbits != 0) {
    throw std::logic_error("order-2 action produced an orbit larger than 2");
  }
  Subgroup zg = centralizer(g, h);
  const std::int64_t r_centralizer =
      static_cast<std::int64_t>(zg.members.size()) / 2;
  if (r_centralizer != orbits.fixed_points) {
    throw std::logic_error("fixed-point count disagrees with centralizer index");
  }
  return z2_profile_values(orbits.fixed_points, orbits.two_orbits);
}

RealizedPair realize(std::int64_t r, std::int64_t q) {
  if (r < 1 || q < 1) throw ValidationError("realize needs r, q >= 1");
  if ((2 * q) % r != 0) {
    throw NotRealizable("(" + std::to_string(r) + ", " + std::to_string(q) +
                        ") is not realizable: r does not divide 2q");
  }
  const std::int64_t m = 2 * q / r;
  GroupPtr g;
  int involution;
  if (m % 2 == 0) {
    // Z_r x (Z_{m+1} x| Z_2)
    GroupPtr twisted = semidirect_inversion(static_cast<int>(m + 1));
    g = direct_product(cyclic(static_cast<int>(r)), twisted);
    involution = static_cast<int>(m + 1);  // (0, (0,1))
  } else {
    // r is even here: r | 2q with m = 2q/r odd forces 2 | r
    const std::int64_t j = r / 2;
    GroupPtr twisted = semidirect_inversion(static_cast<int>(2 * (m + 1)));
    g = direct_product(cyclic(static_cast<int>(j)), twisted);
    involution = static_cast<int>(2 * (m + 1));
  }
  RealizedPair out{g, subgroup_generated(g, {involution})};
  Z2Profile check = z2_profile(out.group, out.subgroup);
  if (check.r != r || check.q != q) {
    throw std::logic_error("realized group has profile (" + std::to_string(check.r) +
                           ", " + std::to_string(check.q) + ") instead of (" +
                           std::to_string(r) + ", " + std::to_string(q) + ")");
  }
  return out;
}

KTheoryInvariants closed_form_ktheory(std::int64_t r, std::int64_t q) {
  Z2Profile prof = z2_profile_values(r, q);
  KTheoryInvariants out;
  std::vector<Zint> torsion, tcoords, fcoords;
  if (r == 1) {
    out.free_rank_k0 = 1;
    out.free_rank_k1 = 1;
    if (q > 1) {
      torsion = {Zint(static_cast<long long>(q))};
      tcoords = {Zint(1)};
    }
    fcoords = {Zint(0)};
  } else if (prof.a == 1) {
    out.free_rank_k0 = 0;
    out.free_rank_k1 = 0;
    torsion = {Zint(static_cast<long long>(prof.d))};
    tcoords = {Zint(static_cast<long long>(prof.p - prof.q))};
  } else {
    out.free_rank_k0 = 0;
    out.free_rank_k1 = 0;
    torsion = {Zint(static_cast<long long>(prof.a)),
               Zint(static_cast<long long>(prof.a * prof.g))};
    tcoords = {Zint(static_cast<long long>(prof.z + prof.w)),
               Zint(static_cast<long long>(prof.u - prof.v))};
  }
  out.identity_class = canonical_class(torsion, out.free_rank_k0, tcoords, fcoords);
  out.torsion = std::move(torsion);

  // the closed forms come with the 2x2 vertex matrix of the family
  IntMat b(2, 2);
  b(0, 0) = Zint(static_cast<long long>(prof.p));
  b(0, 1) = Zint(static_cast<long long>(q));
  b(1, 0) = Zint(static_cast<long long>(q));
  b(1, 1) = Zint(static_cast<long long>(prof.p));
  out.snf = smith_normal_form(b);
  return out;
}

}  // namespace mackey
