#include "orbconf/exactfield.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

namespace orbconf {

// ---------------------------------------------------------------- Rational

Rational::Rational(long numerator, long denominator) : Rational(Integer(numerator), Integer(denominator)) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DivisionByZeroError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty rational literal");

  auto parse_int = [&](const std::string& t) {
    Integer z;
    if (t.empty() || z.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) {
      throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    return z;
  };

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Integer num = parse_int(s.substr(0, slash));
    const Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac_len = s.size() - dot - 1;
    if (digits == "-" || digits == "+" || digits.empty()) throw ParseError("malformed decimal '" + s + "'");
    Integer den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(parse_int(digits), den);
  }
  return Rational(parse_int(s));
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero rational");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------- polynomials/Q

namespace {

using Poly = std::vector<Rational>;  // ascending degree

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Euclidean division; divisor must be nonzero after trimming.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& d) {
  trim(a);
  Poly q;
  if (a.size() < d.size()) return {q, a};
  q.assign(a.size() - d.size() + 1, Rational(0));
  const Rational lead = d.back();
  while (!a.empty() && a.size() >= d.size()) {
    const std::size_t shift = a.size() - d.size();
    const Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) a[i + shift] -= c * d[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly integer_poly(const std::vector<Integer>& p) {
  Poly r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

Poly reduce_mod_cyclotomic(Poly p, int m) {
  const int phi = euler_phi(m);
  trim(p);
  if (static_cast<int>(p.size()) > phi) p = poly_divmod(std::move(p), integer_poly(cyclotomic_polynomial(m))).second;
  p.resize(phi);
  return p;
}

int combined_order(int a, int b) {
  if (a == 1) return b;
  if (b == 1 || a == b) return a;
  throw OrderMismatchError("cyclotomic orders " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

}  // namespace

int euler_phi(int m) {
  if (m <= 0) throw InvalidOrderError("euler_phi requires m >= 1");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  if (m <= 0) throw InvalidOrderError("cyclotomic polynomial requires m >= 1");
  static std::mutex mutex;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // x^m - 1 divided by every Phi_d with d | m, d < m
  Poly num(m + 1, Rational(0));
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divmod(num, integer_poly(cyclotomic_polynomial(d))).first;
  }
  std::vector<Integer> coeffs;
  for (const auto& c : num) coeffs.push_back(c.numerator());
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(coeffs)).first->second;
}

// -------------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order <= 0) throw InvalidOrderError("cyclotomic order must be >= 1");
  if (static_cast<int>(coeffs_.size()) != euler_phi(order)) {
    throw InvalidOrderError("Q(zeta_" + std::to_string(order) + ") needs " + std::to_string(euler_phi(order)) +
                            " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

Cyclotomic Cyclotomic::zeta(int m) { return zeta_power(m, 1); }

Cyclotomic Cyclotomic::zeta_power(int m, long k) {
  if (m <= 0) throw InvalidOrderError("root of unity order must be >= 1");
  const long e = ((k % m) + m) % m;
  Poly p(e + 1, Rational(0));
  p[e] = 1;
  return Cyclotomic(m, reduce_mod_cyclotomic(std::move(p), m));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::optional<Rational> Cyclotomic::rational_value() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return std::nullopt;
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(int target) const {
  if (target <= 0 || target % order_ != 0) {
    throw OrderMismatchError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                             std::to_string(target) + ")");
  }
  if (target == order_) return *this;
  const int step = target / order_;
  Poly p(static_cast<std::size_t>(step) * coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
  return Cyclotomic(target, reduce_mod_cyclotomic(std::move(p), target));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
  if (auto r = rational_value()) {
    Poly c(coeffs_.size(), Rational(0));
    c[0] = r->inverse();
    return Cyclotomic(order_, std::move(c));
  }
  // extended Euclid: s * a + t * Phi = g, g a nonzero constant
  Poly r0 = integer_poly(cyclotomic_polynomial(order_));
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi_m is irreducible and a != 0
  const Rational g = r1.at(0);
  for (auto& c : s1) c /= g;
  return Cyclotomic(order_, reduce_mod_cyclotomic(std::move(s1), order_));
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result(Rational(1));
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    z += coeffs_[k].to_double() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / order_);
  }
  return z;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << coeffs_[k];
    } else {
      if (coeffs_[k] != Rational(1)) os << coeffs_[k] << "*";
      os << "z" << order_;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const int m = combined_order(order_, o.order_);
  if (order_ != m) *this = embed(m);
  const Cyclotomic rhs = o.order_ == m ? o : o.embed(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const int m = combined_order(order_, o.order_);
  if (o.order_ == 1 || order_ == 1) {
    // scalar multiplication by a rational
    const Rational s = order_ == 1 ? coeffs_[0] : o.coeffs_[0];
    Poly base = order_ == 1 ? o.coeffs_ : coeffs_;
    for (auto& c : base) c *= s;
    order_ = m;
    coeffs_ = std::move(base);
    return *this;
  }
  coeffs_ = reduce_mod_cyclotomic(poly_mul(coeffs_, o.coeffs_), m);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {
int common_order(int a, int b) { return std::lcm(a, b); }
}  // namespace

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int m = common_order(a.order_, b.order_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    const int m = common_order(a.order_, b.order_);
    return a.embed(m) <=> b.embed(m);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) {
    throw OrderMismatchError("cyclo_mul: orders " + std::to_string(a.order()) + " and " +
                             std::to_string(b.order()) + " differ");
  }
  return a * b;
}

Cyclotomic cyclo_inverse(const Cyclotomic& a) { return a.inverse(); }

Cyclotomic primitive_root(int m) {
  if (m <= 0) throw InvalidOrderError("primitive_root requires m >= 1, got " + std::to_string(m));
  return Cyclotomic::zeta(m);
}

// -------------------------------------------------------- GaussianRational

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DivisionByZeroError("inverse of zero Gaussian rational");
  return {re / n, -im / n};
}

GaussianRational GaussianRational::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Cyclotomic GaussianRational::to_cyclotomic(int L) const {
  if (L % 4 != 0) throw OrderMismatchError("Q(i) embeds in Q(zeta_L) only when 4 | L");
  return (Cyclotomic(re) + Cyclotomic(im) * Cyclotomic::zeta(4)).embed(L);
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return im.str() + "i";
  return re.str() + (im.sign() > 0 ? "+" : "-") + im.abs().str() + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}
GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}
GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const Integer num = r.numerator();
  const Integer den = r.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) {
      if (auto s = exact_sqrt(z.re)) return GaussianRational(*s);
      return std::nullopt;
    }
    if (auto s = exact_sqrt(-z.re)) return GaussianRational(0, *s);
    return std::nullopt;
  }
  // (x + iy)^2 = a + ib with x^2 = (a + |z|)/2, y = b / (2x)
  const auto modulus = exact_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  const auto x = exact_sqrt((z.re + *modulus) / 2);
  if (!x || x->is_zero()) return std::nullopt;
  return GaussianRational(*x, z.im / (Rational(2) * *x));
}

// ------------------------------------------------------------ ComplexPoint

const GaussianRational& ComplexPoint::gaussian() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return *g;
  throw ExactnessError("exact value requested from an approximate point");
}

std::complex<double> ComplexPoint::numeric() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return g->to_complex();
  return std::get<std::complex<double>>(value_);
}

std::string ComplexPoint::str() const {
  if (is_exact()) return gaussian().str();
  std::ostringstream os;
  os.precision(17);
  const auto z = numeric();
  os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)~";
  return os.str();
}

namespace {
template <class ExactOp, class ApproxOp>
ComplexPoint binary(const ComplexPoint& a, const ComplexPoint& b, ExactOp exact, ApproxOp approx) {
  if (a.is_exact() && b.is_exact()) return ComplexPoint(exact(a.gaussian(), b.gaussian()));
  return ComplexPoint::approx(approx(a.numeric(), b.numeric()));
}
}  // namespace

ComplexPoint operator+(const ComplexPoint& a, const ComplexPoint& b) {
  return binary(a, b, std::plus<>{}, std::plus<>{});
}
ComplexPoint operator-(const ComplexPoint& a, const ComplexPoint& b) {
  return binary(a, b, std::minus<>{}, std::minus<>{});
}
ComplexPoint operator*(const ComplexPoint& a, const ComplexPoint& b) {
  return binary(a, b, std::multiplies<>{}, std::multiplies<>{});
}
ComplexPoint operator/(const ComplexPoint& a, const ComplexPoint& b) {
  if (b.is_exact() && b.gaussian().is_zero()) throw DivisionByZeroError("complex division by zero");
  return binary(a, b, std::divides<>{}, std::divides<>{});
}
ComplexPoint operator-(const ComplexPoint& a) {
  if (a.is_exact()) return ComplexPoint(-a.gaussian());
  return ComplexPoint::approx(-a.numeric());
}

ComplexPoint ComplexPoint::pow(long k) const {
  if (is_exact()) return ComplexPoint(gaussian().pow(k));
  return approx(std::pow(numeric(), static_cast<double>(k)));
}

bool same_point(const ComplexPoint& a, const ComplexPoint& b, Tolerance tol) {
  if (a.is_exact() && b.is_exact()) return a.gaussian() == b.gaussian();
  return std::abs(a.numeric() - b.numeric()) <= tol.eps;
}

bool is_zero(const ComplexPoint& a, Tolerance tol) {
  if (a.is_exact()) return a.gaussian().is_zero();
  return std::abs(a.numeric()) <= tol.eps;
}

bool is_integer(const ComplexPoint& a, Tolerance tol) {
  if (a.is_exact()) return a.gaussian().im.is_zero() && a.gaussian().re.is_integer();
  const auto z = a.numeric();
  return std::abs(z.imag()) <= tol.eps && std::abs(z.real() - std::round(z.real())) <= tol.eps;
}

}  // namespace orbconf
