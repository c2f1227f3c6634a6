#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "mackey/bigint.hpp"
#include "mackey/errors.hpp"

namespace mackey {

using Vec64 = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Element of Z[x]/(x^e - 1); character values live here with x standing
/// for a fixed primitive e-th root of unity.
struct Cyc {
  std::int64_t e = 1;
  Vec64 coeffs;  // length e

  static Cyc zero(std::int64_t e);
  static Cyc integer(std::int64_t e, std::int64_t n);
  /// n * x^k
  static Cyc monomial(std::int64_t e, std::int64_t k, std::int64_t n = 1);

  bool operator==(const Cyc& o) const { return e == o.e && coeffs == o.coeffs; }
};

Cyc operator+(const Cyc& a, const Cyc& b);
Cyc operator-(const Cyc& a, const Cyc& b);
Cyc operator*(const Cyc& a, const Cyc& b);
Cyc operator*(std::int64_t s, const Cyc& a);
/// Complex conjugation x^k -> x^(e-k).
Cyc conj(const Cyc& a);

/// Re-express a value in Z[x]/(x^e2 - 1). Exact whenever the support is
/// compatible (all exponents land on integers); throws otherwise.
Cyc rebase(const Cyc& a, std::int64_t e2);

/// The e-th cyclotomic polynomial, exact integer coefficients.
std::vector<Zint> cyclotomic_polynomial(std::int64_t e);

/// The image of a in Z[zeta_e] when that image is a rational integer:
/// reduces mod the e-th cyclotomic polynomial and requires a constant
/// remainder. Throws ValidationError if the value is not an integer.
Zint integer_value(const Cyc& a);

// --- modular arithmetic (word-sized prime fields) ---------------------------

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t pow_mod(std::int64_t a, std::int64_t k, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);
bool is_prime(std::int64_t n);

/// Residue companion for exact cyclotomic arithmetic: a prime p = 1 (mod e)
/// with p > 2*order^2, and a fixed primitive e-th root of unity mod p.
struct ResidueCtx {
  std::int64_t e = 1;
  std::int64_t p = 0;
  std::int64_t root = 1;  // primitive e-th root of unity mod p

  /// Evaluate a cyclotomic value at the chosen root.
  std::int64_t eval(const Cyc& a) const;
  /// Lift r in GF(p) to the unique integer in (-p/2, p/2).
  std::int64_t lift_signed(std::int64_t r) const;
};

/// Deterministic search; throws ResourceError if no admissible prime is
/// found below the internal search bound.
ResidueCtx make_residue_ctx(std::int64_t e, std::int64_t group_order);

}  // namespace mackey
