#include <doctest.h>

#include <complex>
#include <set>

#include "orbconf/errors.hpp"
#include "orbconf/exactfield.hpp"
#include "support/gen.hpp"

using namespace orbconf;
using orbconf::testing::Gen;

namespace {

bool close(std::complex<double> a, std::complex<double> b, double eps = 1e-9) {
  return std::abs(a - b) <= eps * (1 + std::abs(a) + std::abs(b));
}

}  // namespace

TEST_CASE("rationals are canonical") {
  const Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a == Rational(-3, 2));
  CHECK(Rational::parse("-3/2") == a);
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZeroError);
}

TEST_CASE("arbitrary precision: no overflow past 64 bits") {
  Rational x(1);
  for (int i = 0; i < 40; ++i) x *= Rational(1000);
  CHECK(x.str() == "1" + std::string(120, '0'));
  CHECK((x / x) == Rational(1));
}

TEST_CASE("cyclotomic multiplication examples") {
  const auto z4 = Cyclotomic::zeta(4);
  CHECK(cyclo_mul(z4, z4) == Cyclotomic(-1));
  CHECK(cyclo_mul(z4, z4).embed(4).coeffs()[0] == Rational(-1));
  const auto z3 = Cyclotomic::zeta(3);
  CHECK(cyclo_mul(cyclo_mul(z3, z3), z3) == Cyclotomic(1));
  Gen g(11);
  for (int m : {3, 5, 8, 12}) {
    const auto a = g.cyclotomic(m);
    CHECK(cyclo_mul(a, Cyclotomic(1).embed(m)) == a);
  }
  CHECK_THROWS_AS(cyclo_mul(z3, z4), OrderMismatchError);
}

TEST_CASE("cyclotomic inverse examples") {
  for (int m = 1; m <= 12; ++m) CHECK(cyclo_inverse(Cyclotomic::zeta(m)) == Cyclotomic::zeta_power(m, m - 1));
  CHECK(cyclo_inverse(Cyclotomic(2).embed(5)) == Cyclotomic(Rational(1, 2)));
  const auto z3 = Cyclotomic::zeta(3);
  CHECK(cyclo_inverse(Cyclotomic(1) + z3) == -z3);
  CHECK_THROWS_AS(cyclo_inverse(Cyclotomic(0).embed(7)), DivisionByZeroError);
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(1) == Cyclotomic(1));
  CHECK(primitive_root(2) == Cyclotomic(-1));
  std::set<std::string> powers;
  for (int k = 0; k < 6; ++k) powers.insert(primitive_root(6).pow(k).str());
  CHECK(powers.size() == 6);
  CHECK_THROWS_AS(primitive_root(0), InvalidOrderError);
  CHECK_THROWS_AS(primitive_root(-3), InvalidOrderError);
}

TEST_CASE("property: field laws in Q(zeta_m), m <= 12") {
  Gen g(2024);
  for (int m = 1; m <= 12; ++m) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = g.cyclotomic(m), b = g.cyclotomic(m), c = g.cyclotomic(m);
      CAPTURE(m);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
      // the complex embedding is a ring homomorphism
      CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
      CHECK(close((a + c).to_complex(), a.to_complex() + c.to_complex()));
    }
  }
}

TEST_CASE("property: roots of unity") {
  for (int m = 2; m <= 12; ++m) {
    const auto z = Cyclotomic::zeta(m);
    CHECK(z.pow(m) == Cyclotomic(1));
    Cyclotomic sum(0);
    for (int k = 0; k < m; ++k) {
      if (k > 0) CHECK_FALSE(z.pow(k) == Cyclotomic(1));
      sum += z.pow(k);
    }
    CHECK(sum.is_zero());
    CHECK(close(z.to_complex(), std::polar(1.0, 2 * M_PI / m)));
  }
}

TEST_CASE("rational embedding preserves arithmetic") {
  Gen g(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational a = g.rational(), b = g.nonzero_rational();
    const int m = static_cast<int>(g.integer(1, 12));
    CHECK(Cyclotomic(a).embed(m) * Cyclotomic(b).embed(m) == Cyclotomic(a * b));
    CHECK(Cyclotomic(a).embed(m) / Cyclotomic(b).embed(m) == Cyclotomic(a / b));
    CHECK((Cyclotomic(a).embed(m) - Cyclotomic(b)).rational_value() == a - b);
  }
}

TEST_CASE("Gaussian rationals embed in Q(zeta_4k)") {
  Gen g(3);
  for (int trial = 0; trial < 30; ++trial) {
    const GaussianRational a(g.rational(), g.rational()), b(g.rational(), g.rational());
    CHECK((a * b).to_cyclotomic(4) == a.to_cyclotomic(4) * b.to_cyclotomic(4));
    CHECK((a + b).to_cyclotomic(12) == a.to_cyclotomic(12) + b.to_cyclotomic(12));
  }
  CHECK_THROWS_AS(GaussianRational(1, 1).to_cyclotomic(6), OrderMismatchError);
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  const auto r = exact_sqrt(GaussianRational(0, 2));  // (1 + i)^2 = 2i
  REQUIRE(r.has_value());
  CHECK((*r) * (*r) == GaussianRational(0, 2));
  CHECK_FALSE(exact_sqrt(GaussianRational(0, 1)).has_value());
}

TEST_CASE("complex points: exact and approximate comparison") {
  const Tolerance tol{1e-9};
  const auto a = ComplexPoint::exact(Rational(1, 3), Rational(2));
  CHECK(same_point(a, ComplexPoint::exact(Rational(2, 6), Rational(2)), tol));
  CHECK_FALSE(same_point(a, ComplexPoint::exact(Rational(1, 3) + Rational(1, 1000000000000LL), Rational(2)), tol));
  CHECK(same_point(a, ComplexPoint::approx({1.0 / 3, 2.0}), tol));
  CHECK_THROWS_AS(ComplexPoint::approx({1, 0}).gaussian(), ExactnessError);
  CHECK(is_integer(ComplexPoint(3), tol));
  CHECK(is_integer(ComplexPoint::approx({3.0 + 1e-12, 0}), tol));
  CHECK_FALSE(is_integer(ComplexPoint::exact(Rational(1, 2)), tol));
}

TEST_CASE("property: exact and approximate equality agree away from 2 eps") {
  Gen g(77);
  const Tolerance tol{1e-9};
  int compared = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const ComplexPoint a = g.gaussian(20, 8), b = g.gaussian(20, 8);
    const ComplexPoint aa = ComplexPoint::approx(a.numeric()), bb = ComplexPoint::approx(b.numeric());
    if (std::abs(a.numeric() - b.numeric()) <= 2 * tol.eps && !same_point(a, b, tol)) continue;
    ++compared;
    CHECK(same_point(a, b, tol) == same_point(aa, bb, tol));
    CHECK(same_point(a, b, tol) == same_point(aa, b, tol));
  }
  CHECK(compared == 2000);
}
