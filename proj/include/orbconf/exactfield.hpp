#pragma once

// Exact scalars: arbitrary precision rationals, cyclotomic fields Q(zeta_m),
// Gaussian rationals, and complex points that are either exact or approximate.
// Rational and Cyclotomic are usable as Eigen scalar types.

#include <gmpxx.h>

#include <Eigen/Core>
#include <complex>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orbconf/errors.hpp"

namespace orbconf {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : value_(make_integer(v)) {}  // NOLINT(implicit)
  Rational(long numerator, long denominator);
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(const Integer& v) : value_(v) {}
  explicit Rational(mpq_class v);

  /// Parses "p/q", "p" or a finite decimal such as "-0.25".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  Integer floor() const;
  Rational abs() const;
  Rational inverse() const;

  /// "p/q", or just "p" when the denominator is one.
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  template <std::integral I>
  static mpz_class make_integer(I v) {
    if constexpr (std::is_signed_v<I>) {
      return mpz_class(static_cast<long>(v));
    } else {
      return mpz_class(static_cast<unsigned long>(v));
    }
  }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Euler's totient.
int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, ascending degree.
const std::vector<Integer>& cyclotomic_polynomial(int m);

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).
///
/// Order-1 elements are plain rationals and combine with any order; two
/// elements of different orders greater than one cannot be combined.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  template <std::integral I>
  Cyclotomic(I v) : Cyclotomic(Rational(v)) {}  // NOLINT(implicit)
  Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}  // NOLINT(implicit)
  Cyclotomic(int order, std::vector<Rational> coeffs);

  /// A primitive m-th root of unity.
  static Cyclotomic zeta(int m);
  /// zeta_m^k for any integer k.
  static Cyclotomic zeta_power(int m, long k);

  int order() const { return order_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> rational_value() const;

  /// Same element viewed in Q(zeta_target); requires order() | target.
  Cyclotomic embed(int target) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long k) const;

  /// Numerical value with zeta_m = exp(2 pi i / m).
  std::complex<double> to_complex() const;

  std::string str() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic& a);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Total order used for canonical sorting (not a field order).
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyclo_inverse(const Cyclotomic& a);
Cyclotomic primitive_root(int m);

/// x + iy with x, y rational.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  template <std::integral I>
  GaussianRational(I v) : re(v) {}  // NOLINT

  static GaussianRational i() { return {0, 1}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const;
  GaussianRational pow(long k) const;
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  /// Image in Q(zeta_L); requires 4 | L.
  Cyclotomic to_cyclotomic(int L) const;
  std::string str() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Square root of a non-negative rational when it is rational.
std::optional<Rational> exact_sqrt(const Rational& r);
/// A square root in Q(i) when one exists.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

/// Explicit comparison tolerance for approximate values.
struct Tolerance {
  double eps = 1e-9;
};

/// A point of C, either exact (Gaussian rational) or approximate (double).
class ComplexPoint {
 public:
  ComplexPoint() : value_(GaussianRational{}) {}
  ComplexPoint(GaussianRational z) : value_(std::move(z)) {}  // NOLINT(implicit)
  template <std::integral I>
  ComplexPoint(I v) : value_(GaussianRational(v)) {}  // NOLINT(implicit)
  ComplexPoint(const Rational& r) : value_(GaussianRational(r)) {}  // NOLINT(implicit)

  static ComplexPoint exact(Rational re, Rational im = Rational(0)) {
    return ComplexPoint(GaussianRational(std::move(re), std::move(im)));
  }
  static ComplexPoint approx(std::complex<double> z) {
    ComplexPoint p;
    p.value_ = z;
    return p;
  }

  bool is_exact() const { return std::holds_alternative<GaussianRational>(value_); }
  /// Throws ExactnessError for approximate points.
  const GaussianRational& gaussian() const;
  std::complex<double> numeric() const;

  std::string str() const;

  friend ComplexPoint operator+(const ComplexPoint& a, const ComplexPoint& b);
  friend ComplexPoint operator-(const ComplexPoint& a, const ComplexPoint& b);
  friend ComplexPoint operator*(const ComplexPoint& a, const ComplexPoint& b);
  friend ComplexPoint operator/(const ComplexPoint& a, const ComplexPoint& b);
  friend ComplexPoint operator-(const ComplexPoint& a);
  ComplexPoint pow(long k) const;

 private:
  std::variant<GaussianRational, std::complex<double>> value_;
};

/// Exact comparison when both points are exact, |a - b| <= eps otherwise.
bool same_point(const ComplexPoint& a, const ComplexPoint& b, Tolerance tol);
bool is_zero(const ComplexPoint& a, Tolerance tol);

/// Integer test: exact when possible, distance to the nearest integer otherwise.
bool is_integer(const ComplexPoint& a, Tolerance tol);

}  // namespace orbconf

namespace Eigen {

template <>
struct NumTraits<orbconf::Rational> : GenericNumTraits<orbconf::Rational> {
  using Real = orbconf::Rational;
  using NonInteger = orbconf::Rational;
  using Literal = orbconf::Rational;
  using Nested = orbconf::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline orbconf::Rational epsilon() { return 0; }
  static inline orbconf::Rational dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<orbconf::Cyclotomic> : GenericNumTraits<orbconf::Cyclotomic> {
  using Real = orbconf::Cyclotomic;
  using NonInteger = orbconf::Cyclotomic;
  using Literal = orbconf::Cyclotomic;
  using Nested = orbconf::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 256
  };
  static inline orbconf::Cyclotomic epsilon() { return 0; }
  static inline orbconf::Cyclotomic dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
