#include <doctest.h>

#include "orbconf/arrangement.hpp"
#include "orbconf/errors.hpp"
#include "orbconf/orbit_config.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace orbconf;
using orbconf::testing::Gen;

namespace {

/// Rows [a_1 .. a_d, b] for a . x = b.
ArrangementSpec make(int dim, std::vector<std::vector<long>> rows) {
  std::vector<HyperplaneRow> hs;
  for (const auto& r : rows) {
    HyperplaneRow h;
    for (int k = 0; k < dim; ++k) h.normal.emplace_back(r[k]);
    h.offset = Cyclotomic(r[dim]);
    hs.push_back(std::move(h));
  }
  return ArrangementSpec(dim, FieldTag{1}, "test", std::move(hs));
}

Polynomial from_oracle(const std::vector<mpz_class>& c) { return Polynomial(std::vector<Integer>(c.begin(), c.end())); }

Polynomial chi(const ArrangementSpec& a) { return flat_poset(a).characteristic(); }

}  // namespace

TEST_CASE("flat poset examples") {
  const auto p = flat_poset(braid_arrangement(3).rational_or_throw());
  CHECK(p.flats.size() == 5);
  CHECK(p.count_by_dim().at(3) == 1);
  CHECK(p.count_by_dim().at(2) == 3);
  CHECK(p.count_by_dim().at(1) == 1);
  CHECK(p.flats.back().mobius == 2);

  const auto single = flat_poset(make(2, {{1, 0, 0}}).rational_or_throw());
  REQUIRE(single.flats.size() == 2);
  CHECK(single.flats[1].mobius == -1);

  const auto x1 = flat_poset(case3_X_arrangement(1).rational_or_throw());
  CHECK(x1.flats.back().dim == 0);
  CHECK(x1.flats.back().mobius == 2);
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(chi(braid_arrangement(3)) == Polynomial{0, 2, -3, 1});
  CHECK(chi(make(3, {})) == Polynomial::monomial(3));
  CHECK(chi(case1_arrangement(2, 2)) == Polynomial{1, -2, 1});
  // parallel lines never meet
  CHECK(chi(make(2, {{1, 0, 0}, {1, 0, 1}})) == Polynomial{0, -2, 1});
}

TEST_CASE("Poincare polynomial examples") {
  CHECK(flat_poset(braid_arrangement(3)).poincare() == Polynomial{1, 3, 2});
  CHECK(flat_poset(make(2, {})).poincare() == Polynomial{1});
  const auto c23 = flat_poset(case1_arrangement(2, 3));
  CHECK_FALSE(c23.rational.has_value());
  CHECK(c23.poincare() == Polynomial{1, 3, 2});
  CHECK(flat_poset(case1_arrangement(2, 2)).poincare() == Polynomial{1, 2, 1});
}

TEST_CASE("chamber count examples") {
  CHECK(chamber_count(flat_poset(braid_arrangement(3))).total == 6);
  const auto x1 = chamber_count(flat_poset(case3_X_arrangement(1)));
  CHECK(x1.total == 6);
  CHECK(x1.bounded == 0);
  CHECK(chamber_count(flat_poset(make(2, {{1, 1, 0}}))).total == 2);
  // a triangle: 7 regions, 1 bounded
  const auto tri = chamber_count(flat_poset(make(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}})));
  CHECK(tri.total == 7);
  CHECK(tri.bounded == 1);
  CHECK_THROWS_AS(chamber_count(flat_poset(case1_arrangement(2, 3))), NotRealError);
}

TEST_CASE("chamber enumeration examples") {
  CHECK(enumerate_chambers(case1_arrangement(2, 2)).size() == 4);
  CHECK(enumerate_chambers(braid_arrangement(3)).size() == 6);
  const auto x2 = case3_X_arrangement(2);
  CHECK(Integer(enumerate_chambers(x2).size()) == chamber_count(flat_poset(x2)).total);
  CHECK_THROWS_AS(enumerate_chambers(braid_arrangement(8)), SizeError);
}

TEST_CASE("chamber witnesses realize their sign vectors") {
  for (const auto& a : corpus::named_arrangements()) {
    const auto h = a.rational_or_throw();
    for (const auto& c : enumerate_chambers(a).chambers) {
      for (Eigen::Index i = 0; i < h.count(); ++i) {
        Rational v = -h.offsets(i);
        for (Eigen::Index k = 0; k < h.dim(); ++k) v += h.normals(i, k) * c.witness(k);
        CHECK(v.sign() == c.signs[i]);
      }
    }
  }
}

TEST_CASE("simpliciality examples") {
  CHECK(is_simplicial(make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})).simplicial);
  const auto x1 = is_simplicial(case3_X_arrangement(1));
  CHECK(x1.simplicial);
  CHECK(x1.chambers == 6);
  for (int w : x1.wall_counts) CHECK(w == 2);
  CHECK(is_simplicial(case3_X_arrangement(2)).simplicial);
  // four generic planes through the origin cut quadrilateral cones
  CHECK_FALSE(is_simplicial(make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}})).simplicial);
  CHECK_THROWS_AS(is_simplicial(make(2, {{1, 0, 1}})), CentralityError);
  // braid arrangements are simplicial after essentialization
  CHECK(is_simplicial(braid_arrangement(4)).simplicial);
}

TEST_CASE("finite-field count examples") {
  CHECK(finite_field_count(braid_arrangement(3), 5) == 60);
  CHECK(finite_field_count(make(2, {}), 3) == 9);
  CHECK(finite_field_count(case3_X_arrangement(1), 5) == 12);
  // x = 0 and x = 2 collide mod 2
  const auto a = make(1, {{1, 0}, {1, 2}});
  CHECK(bad_primes(a).count(2) == 1);
  CHECK_THROWS_AS(finite_field_count(a, 2), BadPrimeError);
  CHECK(oracle::finite_field_count(a, 2) != chi(a).eval(Integer(2)));
  CHECK_THROWS_AS(finite_field_count(a, 9), BadPrimeError);
}

TEST_CASE("restriction and deletion") {
  const auto b3 = braid_arrangement(3);
  const auto r = restriction(b3, 0);
  CHECK(r.dim() == 2);
  CHECK(r.size() == 1);  // the other two planes meet x1 = x2 in the same line
}

TEST_CASE("property: characteristic polynomial matches Whitney's subset formula") {
  Gen g(1);
  std::vector<ArrangementSpec> cases = corpus::named_arrangements();
  for (int i = 0; i < 60; ++i) {
    cases.push_back(g.arrangement(static_cast<int>(g.integer(1, 4)), static_cast<int>(g.integer(0, 8)), g.coin()));
  }
  for (const auto& a : cases) {
    CAPTURE(a.label());
    CHECK(chi(a) == from_oracle(oracle::whitney_chi(a)));
  }
}

TEST_CASE("property: Mobius zero sums and Whitney signs") {
  Gen g(2);
  for (int i = 0; i < 40; ++i) {
    const bool central = i % 2 == 0;
    const auto a = g.arrangement(static_cast<int>(g.integer(1, 4)), static_cast<int>(g.integer(1, 7)), central);
    const auto p = flat_poset(a.rational_or_throw());
    for (std::size_t x = 1; x < p.flats.size(); ++x) {
      const auto& hx = p.flats[x].hyperplanes;
      Integer sum = 0;
      for (const auto& z : p.flats) {
        if (std::includes(hx.begin(), hx.end(), z.hyperplanes.begin(), z.hyperplanes.end())) sum += z.mobius;
      }
      CHECK(sum == 0);
      if (central) {
        const int codim = static_cast<int>(p.ambient_dim - p.flats[x].dim);
        CHECK(sgn(p.flats[x].mobius) == (codim % 2 == 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("property: deletion-restriction") {
  Gen g(3);
  std::vector<ArrangementSpec> cases = corpus::named_arrangements();
  for (int i = 0; i < 30; ++i) cases.push_back(g.arrangement(static_cast<int>(g.integer(2, 4)), static_cast<int>(g.integer(1, 7)), g.coin()));
  for (const auto& a : cases) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      CHECK(chi(a) == chi(a.deletion(i)) - chi(restriction(a, i)));
    }
  }
}

TEST_CASE("property: braid Poincare polynomial is a product of (1 + i t)") {
  for (int n = 1; n <= 5; ++n) {
    Polynomial expected{1};
    for (int i = 1; i < n; ++i) expected = expected * Polynomial{1, i};
    CHECK(flat_poset(braid_arrangement(n)).poincare() == expected);
  }
}

TEST_CASE("property: Zaslavsky count equals enumeration") {
  Gen g(4);
  for (int i = 0; i < 100; ++i) {
    const auto a = g.arrangement(static_cast<int>(g.integer(1, 4)), static_cast<int>(g.integer(0, 8)), g.coin());
    const auto count = chamber_count(flat_poset(a));
    const auto set = enumerate_chambers(a);
    CHECK(Integer(set.size()) == count.total);
  }
}

TEST_CASE("property: finite-field counts match chi at good primes") {
  Gen g(5);
  std::vector<ArrangementSpec> cases = corpus::named_arrangements();
  for (int i = 0; i < 30; ++i) cases.push_back(g.arrangement(static_cast<int>(g.integer(1, 3)), static_cast<int>(g.integer(1, 6)), g.coin()));
  for (const auto& a : cases) {
    const Polynomial c = chi(a);
    const auto primes = good_primes(a, 2);
    REQUIRE(primes.size() == 2);
    for (long q : primes) {
      CHECK(bad_primes(a).count(q) == 0);
      const Integer lib = finite_field_count(a, q);
      CHECK(lib == c.eval(Integer(q)));
      CHECK(lib == oracle::finite_field_count(a, q));
    }
  }
}

TEST_CASE("property: cyclotomic posets agree with their rational form") {
  // An arrangement with rational coefficients viewed inside Q(zeta_5) has the same poset.
  Gen g(6);
  for (int i = 0; i < 15; ++i) {
    const auto a = g.arrangement(3, static_cast<int>(g.integer(1, 6)), g.coin());
    const auto rq = flat_poset(a.rational_or_throw());
    Hyperplanes<Cyclotomic> h{Matrix<Cyclotomic>(a.size(), 3), Vector<Cyclotomic>(a.size())};
    const auto rows = a.rows();
    for (Eigen::Index r = 0; r < a.size(); ++r) {
      for (int k = 0; k < 3; ++k) h.normals(r, k) = rows[r].normal[k].embed(5);
      h.offsets(r) = rows[r].offset.embed(5);
    }
    const auto rc = flat_poset(h);
    CHECK(characteristic_polynomial(rc) == characteristic_polynomial(rq));
  }
}
