#include "mackey/cyclotomic.hpp"

#include <algorithm>

namespace mackey {

Cyc Cyc::zero(std::int64_t e) {
  Cyc c;
  c.e = e;
  c.coeffs = Vec64::Zero(e);
  return c;
}

Cyc Cyc::integer(std::int64_t e, std::int64_t n) {
  Cyc c = zero(e);
  c.coeffs[0] = n;
  return c;
}

Cyc Cyc::monomial(std::int64_t e, std::int64_t k, std::int64_t n) {
  Cyc c = zero(e);
  c.coeffs[((k % e) + e) % e] = n;
  return c;
}

namespace {
void require_same_modulus(const Cyc& a, const Cyc& b) {
  if (a.e != b.e) throw ValidationError("cyclotomic modulus mismatch");
}
}  // namespace

Cyc operator+(const Cyc& a, const Cyc& b) {
  require_same_modulus(a, b);
  Cyc c = a;
  c.coeffs += b.coeffs;
  return c;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
  require_same_modulus(a, b);
  Cyc c = a;
  c.coeffs -= b.coeffs;
  return c;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  require_same_modulus(a, b);
  Cyc c = Cyc::zero(a.e);
  for (std::int64_t i = 0; i < a.e; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::int64_t j = 0; j < b.e; ++j) {
      if (b.coeffs[j] == 0) continue;
      c.coeffs[(i + j) % a.e] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return c;
}

Cyc operator*(std::int64_t s, const Cyc& a) {
  Cyc c = a;
  c.coeffs *= s;
  return c;
}

Cyc conj(const Cyc& a) {
  Cyc c = Cyc::zero(a.e);
  for (std::int64_t i = 0; i < a.e; ++i) {
    c.coeffs[(a.e - i) % a.e] = a.coeffs[i];
  }
  return c;
}

Cyc rebase(const Cyc& a, std::int64_t e2) {
  if (a.e == e2) return a;
  Cyc c = Cyc::zero(e2);
  for (std::int64_t i = 0; i < a.e; ++i) {
    if (a.coeffs[i] == 0) continue;
    if ((i * e2) % a.e != 0) {
      throw ValidationError("cyclotomic value has no exact representation in modulus " +
                            std::to_string(e2));
    }
    c.coeffs[(i * e2 / a.e) % e2] += a.coeffs[i];
  }
  return c;
}

std::vector<Zint> cyclotomic_polynomial(std::int64_t e) {
  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, by exact division.
  std::vector<Zint> num(e + 1, Zint(0));
  num[0] = -1;
  num[e] = 1;
  for (std::int64_t d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    std::vector<Zint> phi_d = cyclotomic_polynomial(d);
    // num /= phi_d (both monic up to the leading coefficient of phi_d = 1)
    std::vector<Zint> quot(num.size() - phi_d.size() + 1, Zint(0));
    std::vector<Zint> rem = num;
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
      Zint c = rem[k + phi_d.size() - 1];
      quot[k] = c;
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < phi_d.size(); ++j) rem[k + j] -= c * phi_d[j];
    }
    for (const Zint& r : rem) {
      if (!r.is_zero()) throw ValidationError("cyclotomic division not exact");  // unreachable
    }
    num = std::move(quot);
  }
  return num;
}

Zint integer_value(const Cyc& a) {
  std::vector<Zint> rem(a.e, Zint(0));
  for (std::int64_t i = 0; i < a.e; ++i) rem[i] = Zint(a.coeffs[i]);
  const std::vector<Zint> phi = cyclotomic_polynomial(a.e);
  const int dphi = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(rem.size()) - 1; k >= dphi; --k) {
    Zint c = rem[k];
    if (c.is_zero()) continue;
    for (int j = 0; j <= dphi; ++j) rem[k - dphi + j] -= c * phi[j];
  }
  for (std::size_t i = 1; i < rem.size() && static_cast<int>(i) < dphi; ++i) {
    if (!rem[i].is_zero()) {
      throw ValidationError("cyclotomic value is not a rational integer");
    }
  }
  return rem[0];
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * static_cast<__int128>(b) % p);
}

std::int64_t pow_mod(std::int64_t a, std::int64_t k, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (k > 0) {
    if (k & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    k >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) { return pow_mod(a, p - 2, p); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t ResidueCtx::eval(const Cyc& a) const {
  if (a.e != e) throw ValidationError("residue context modulus mismatch");
  std::int64_t acc = 0;
  std::int64_t zk = 1;
  for (std::int64_t i = 0; i < a.e; ++i) {
    std::int64_t c = a.coeffs[i] % p;
    if (c < 0) c += p;
    acc = (acc + mul_mod(c, zk, p)) % p;
    zk = mul_mod(zk, root, p);
  }
  return acc;
}

std::int64_t ResidueCtx::lift_signed(std::int64_t r) const {
  return r > p / 2 ? r - p : r;
}

ResidueCtx make_residue_ctx(std::int64_t e, std::int64_t group_order) {
  const std::int64_t lower = 2 * group_order * group_order;
  std::int64_t k = lower / e + 1;
  const std::int64_t k_bound = k + 100000000;
  std::int64_t p = 0;
  for (; k <= k_bound; ++k) {
    std::int64_t cand = e * k + 1;
    if (cand > lower && is_prime(cand)) { p = cand; break; }
  }
  if (p == 0) {
    throw ResourceError("no prime = 1 (mod " + std::to_string(e) +
                        ") found below search bound");
  }
  // primitive e-th root: a^((p-1)/e) works iff its order is exactly e
  std::vector<std::int64_t> prime_divisors;
  std::int64_t m = e;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      prime_divisors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) prime_divisors.push_back(m);
  std::int64_t root = 1;
  if (e > 1) {
    for (std::int64_t a = 2; a < p; ++a) {
      std::int64_t z = pow_mod(a, (p - 1) / e, p);
      if (z == 1) continue;
      bool primitive = true;
      for (std::int64_t q : prime_divisors) {
        if (pow_mod(z, e / q, p) == 1) { primitive = false; break; }
      }
      if (primitive) { root = z; break; }
    }
    if (root == 1) throw ResourceError("no primitive root found");  // unreachable
  }
  return {e, p, root};
}

}  // namespace mackey
