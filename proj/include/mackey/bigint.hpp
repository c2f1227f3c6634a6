#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace mackey {

/// Arbitrary-precision signed integer usable as an Eigen scalar.
///
/// Thin wrapper over boost::multiprecision::cpp_int with a constrained
/// constructor set; cpp_int itself cannot be used directly as an Eigen
/// scalar because its templated converting constructors collide with
/// Eigen's scalar/matrix overload resolution.
class Zint {
 public:
  using backend = boost::multiprecision::cpp_int;

  Zint() : v_(0) {}
  Zint(int x) : v_(x) {}                // NOLINT(google-explicit-constructor)
  Zint(long x) : v_(x) {}               // NOLINT(google-explicit-constructor)
  Zint(long long x) : v_(x) {}          // NOLINT(google-explicit-constructor)
  explicit Zint(backend x) : v_(std::move(x)) {}
  explicit Zint(const std::string& decimal) : v_(decimal) {}

  const backend& raw() const { return v_; }

  friend Zint operator+(const Zint& a, const Zint& b) { return Zint(a.v_ + b.v_); }
  friend Zint operator-(const Zint& a, const Zint& b) { return Zint(a.v_ - b.v_); }
  friend Zint operator*(const Zint& a, const Zint& b) { return Zint(a.v_ * b.v_); }
  /// Truncated (C-style) quotient.
  friend Zint operator/(const Zint& a, const Zint& b) { return Zint(a.v_ / b.v_); }
  friend Zint operator%(const Zint& a, const Zint& b) { return Zint(a.v_ % b.v_); }
  Zint operator-() const { return Zint(-v_); }

  Zint& operator+=(const Zint& o) { v_ += o.v_; return *this; }
  Zint& operator-=(const Zint& o) { v_ -= o.v_; return *this; }
  Zint& operator*=(const Zint& o) { v_ *= o.v_; return *this; }
  Zint& operator/=(const Zint& o) { v_ /= o.v_; return *this; }
  Zint& operator%=(const Zint& o) { v_ %= o.v_; return *this; }

  friend bool operator==(const Zint& a, const Zint& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Zint& a, const Zint& b) { return a.v_ != b.v_; }
  friend bool operator<(const Zint& a, const Zint& b) { return a.v_ < b.v_; }
  friend bool operator>(const Zint& a, const Zint& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Zint& a, const Zint& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Zint& a, const Zint& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  bool fits_int64() const {
    return v_ >= backend(INT64_MIN) && v_ <= backend(INT64_MAX);
  }
  std::int64_t to_int64() const { return static_cast<std::int64_t>(v_); }
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Zint& a);

 private:
  backend v_;
};

inline std::ostream& operator<<(std::ostream& os, const Zint& a) {
  return os << a.v_;
}

inline Zint abs(const Zint& a) { return a.sign() < 0 ? -a : a; }

inline Zint gcd(const Zint& a, const Zint& b) {
  return Zint(boost::multiprecision::gcd(a.raw(), b.raw()));
}

/// g = gcd(a, b) together with x, y such that a*x + b*y = g.
struct ExtGcd {
  Zint g, x, y;
};

inline ExtGcd ext_gcd(const Zint& a, const Zint& b) {
  Zint old_r = a, r = b;
  Zint old_x = 1, x = 0;
  Zint old_y = 0, y = 1;
  while (!r.is_zero()) {
    Zint q = old_r / r;
    Zint t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * x; old_x = x; x = t;
    t = old_y - q * y; old_y = y; y = t;
  }
  if (old_r.sign() < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  return {old_r, old_x, old_y};
}

/// Canonical nonnegative residue of a mod m (m > 0).
inline Zint mod_floor(const Zint& a, const Zint& m) {
  Zint r = a % m;
  if (r.sign() < 0) r += m;
  return r;
}

using IntMat = Eigen::Matrix<Zint, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Zint, Eigen::Dynamic, 1>;

}  // namespace mackey

namespace Eigen {

template <>
struct NumTraits<mackey::Zint> {
  using Real = mackey::Zint;
  using NonInteger = mackey::Zint;
  using Nested = mackey::Zint;
  using Literal = mackey::Zint;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 60,
    MulCost = 100
  };
  static inline Real epsilon() { return mackey::Zint(0); }
  static inline Real dummy_precision() { return mackey::Zint(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
