// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "orbconf/arrangement.hpp"
#include "orbconf/covering.hpp"
#include "orbconf/errors.hpp"
#include "orbconf/groupoid.hpp"
#include "orbconf/obstruction.hpp"
#include "orbconf/orbit_config.hpp"
#include "orbconf/orbmodel.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace orbconf;
using orbconf::testing::Gen;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> body;
};

ComplexPoint q(long p, long d = 1) { return ComplexPoint::exact(Rational(p, d)); }

bool distinct_powers(const std::vector<ComplexPoint>& z, int m) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (oracle::power(z[i].gaussian(), m) == oracle::power(z[j].gaussian(), m)) return false;
    }
  }
  return true;
}

Outcome q_branch_data() {
  Outcome o;
  o.require(q_map(q(1)).gaussian() == GaussianRational(0), "q(1) != 0");
  o.require(q_map(q(-1)).gaussian() == GaussianRational(Rational(1, 2)), "q(-1) != 1/2");
  Gen g(1001);
  std::vector<Rational> values{Rational(0), Rational(1, 2)};
  while (values.size() < 200) values.push_back(g.rational(40, 24));
  for (const Rational& v : values) {
    const auto f = q_fiber(ComplexPoint::exact(v));
    const bool special = v == Rational(0) || v == Rational(1, 2);
    o.require(f.exact, "fiber over " + v.str() + " is not exact");
    o.require(f.branch == special, "branch flag wrong at " + v.str());
    if (special) {
      o.require(f.size() == 1, "branch fiber over " + v.str() + " is not a double root");
      if (f.size() == 1) o.require(oracle::q_value(f.points[0].gaussian()) == GaussianRational(v), "branch root");
      continue;
    }
    o.require(f.size() == 2 && f.surds.size() == 2, "fiber over " + v.str() + " lacks two roots");
    if (f.surds.size() != 2) continue;
    const QuadSurd one{GaussianRational(1), GaussianRational(0), f.surds[0].d};
    o.require(f.surds[0] * f.surds[1] == one, "roots over " + v.str() + " are not reciprocal");
    o.require(!(f.surds[0] == f.surds[1]), "roots over " + v.str() + " coincide");
    for (const auto& s : f.surds) {
      o.require(q_map(s) == QuadSurd{GaussianRational(v), GaussianRational(0), s.d}, "root does not map to " + v.str());
    }
  }
  return o;
}

Outcome case3_simplicial() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const auto c = is_simplicial(case3_X_arrangement(n));
    o.require(c.simplicial, "case3X(" + std::to_string(n) + ") not simplicial");
    o.require(c.chambers > 0 && c.wall_counts.size() == c.chambers, "no chambers reported");
    for (int w : c.wall_counts) o.require(w == c.rank, "wall count differs from rank");
    std::printf("      case3X(%d): rank %ld, %zu chambers\n", n, static_cast<long>(c.rank), c.chambers);
  }
  return o;
}

Outcome zaslavsky_agreement() {
  Outcome o;
  Gen g(1003);
  std::vector<ArrangementSpec> cases;
  for (int i = 0; i < 100; ++i) {
    cases.push_back(g.arrangement(static_cast<int>(g.integer(1, 4)), static_cast<int>(g.integer(0, 8)), g.coin()));
  }
  for (auto& a : corpus::named_arrangements()) cases.push_back(a);
  for (const auto& a : cases) {
    const Integer total = chamber_count(flat_poset(a)).total;
    const Integer listed(enumerate_chambers(a).size());
    o.require(total == listed, a.label() + ": " + total.get_str() + " vs " + listed.get_str());
  }
  return o;
}

Outcome finite_field_oracle() {
  Outcome o;
  for (const auto& a : corpus::named_arrangements()) {
    const Polynomial chi = flat_poset(a).characteristic();
    const auto primes = good_primes(a, 2);
    o.require(primes.size() == 2, a.label() + ": fewer than two good primes");
    for (long p : primes) {
      const Integer count = finite_field_count(a, p);
      o.require(count == chi.eval(Integer(p)), a.label() + ": chi(" + std::to_string(p) + ") mismatch");
      o.require(count == oracle::finite_field_count(a, p), a.label() + ": brute-force count mismatch");
    }
  }
  return o;
}

/// A point set that repeats a rotated coordinate about half the time.
std::vector<ComplexPoint> clustered(Gen& g, int n) {
  std::vector<ComplexPoint> z;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && g.integer(0, 2) == 0) {
      const ComplexPoint unit = g.coin() ? ComplexPoint(-1) : ComplexPoint::exact(0, g.coin() ? 1 : -1);
      z.push_back(z[g.integer(0, i - 1)] * unit);
    } else {
      z.push_back(g.gaussian(3, 2));
    }
  }
  return z;
}

Outcome case1_agreement() {
  Outcome o;
  Gen g(1005);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      const auto spec = case1_arrangement(n, m);
      int hits = 0;
      for (int s = 0; s < 1000; ++s) {
        const auto z = clustered(g, n);
        const bool avoids = spec.avoids(z);
        // m = 1 has no rotation action; the predicate is pairwise distinctness
        const bool member = m == 1 ? distinct_powers(z, 1) : is_orbit_config(PlanarAction::rotation(m), z);
        o.require(member == distinct_powers(z, m), "predicate disagrees with z_i^m != z_j^m");
        o.require(avoids == member, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " sample " + std::to_string(s));
        hits += member;
      }
      o.require(hits > 0 && hits < 1000, "one-sided sample at m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome fibration_map() {
  Outcome o;
  Gen g(1006);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      int tested = 0;
      while (tested < 1000) {
        std::vector<ComplexPoint> z;
        for (int i = 0; i < n; ++i) z.push_back(g.gaussian(4, 3));
        if (!distinct_powers(z, m)) continue;
        ++tested;
        const auto b = fn_fibration_map(z, m);
        o.require(static_cast<int>(b.size()) == n - 1, "wrong output length");
        o.require(in_PB_cstar(b), "image outside PB(C*) at m=" + std::to_string(m) + " n=" + std::to_string(n));
        for (int j = 0; j + 1 < n && j < static_cast<int>(b.size()); ++j) {
          o.require(b[j].gaussian() == oracle::power(z[n - 1].gaussian(), m) - oracle::power(z[j].gaussian(), m),
                    "image coordinate differs from z_n^m - z_j^m");
        }
      }
    }
  }
  return o;
}

Outcome covering_degrees() {
  Outcome o;
  std::vector<std::pair<std::string, long>> maps{{"q", 2}, {"qE(2)", 4}};
  for (int n = 1; n <= 4; ++n) maps.emplace_back("squaring(" + std::to_string(n) + ")", 1L << n);
  for (const auto& [text, degree] : maps) {
    CoverPlan plan;
    plan.seed = 1007;
    const auto r = verify_cover(CoverMapId::parse(text), plan);
    o.require(r.pass, text + ": " + (r.failures.empty() ? std::string("failed") : r.failures.front()));
    o.require(r.declared_degree == degree, text + ": declared degree");
    o.require(r.fiber_sizes.size() == 1 && r.fiber_sizes.begin()->first == degree, text + ": fiber sizes not constant");
    o.require(!r.deck_checks.empty(), text + ": no deck checks");
    for (const auto& d : r.deck_checks) o.require(d.passed(), text + ": deck check " + d.name);
    o.require(r.generic_samples > 0, text + ": no generic samples");
  }
  return o;
}

Outcome obstruction_pairs() {
  Outcome o;
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      const auto w = quasifibration_witness(PlanarAction::rotation(m), n);
      const std::string at = " at m=" + std::to_string(m) + " n=" + std::to_string(n);
      o.require(w.at_fixed.b1 == 1 + m * (n - 2), "fixed-point b1" + at);
      o.require(w.at_free.b1 == m * (n - 1), "free-point b1" + at);
      o.require(w.verdict == ObstructionVerdict::not_quasifibration, "verdict" + at);
    }
  }
  return o;
}

Outcome groupoid_suite() {
  Outcome o;
  long coverings = 0, triples = 0;
  for (const auto& grp : corpus::small_groups()) {
    const auto subs = grp.group.subgroups();
    for (const auto& a : corpus::actions_of(grp, 12)) {
      const auto t = translation_groupoid(a.action);
      o.require(check_axioms(t).passed(), a.name + ": axioms");
      for (const auto& sub : subs) {
        const auto f = subgroup_inclusion(a.action, sub);
        o.require(check_axioms(f.source).passed(), a.name + ": sub-action axioms");
        const auto v = is_covering_hom(f);
        o.require(v.ok, a.name + ": " + v.diagnostic);
        ++coverings;
      }
    }
  }
  for (const auto& grp : corpus::morita_groups()) {
    const auto reg = GroupAction::regular(grp.group);
    const auto doubled = GroupAction::disjoint_union(reg, reg);
    const auto normals = grp.group.normal_subgroups();
    for (const auto* act : {&reg, &doubled}) {
      for (const auto& n1 : normals) {
        for (const auto& n2 : normals) {
          const auto m = morita_triple(*act, n1, n2);
          for (const auto* g : {&m.k, &m.g1, &m.g2}) o.require(check_axioms(*g).passed(), grp.name + ": quotient axioms");
          for (const auto* e : {&m.e1, &m.e2}) {
            const auto r = is_equivalence(*e);
            o.require(r.ok(), grp.name + ": " + r.essentially_surjective.diagnostic + r.fully_faithful.diagnostic +
                                  r.homomorphism.diagnostic);
          }
          ++triples;
        }
      }
    }
  }
  std::printf("      %ld subgroup inclusions, %ld quotient triples\n", coverings, triples);
  return o;
}

Orbifold2D sphere(std::vector<int> cones) { return make_orbifold(0, true, 0, 0, std::move(cones)); }

Outcome classification_table() {
  Outcome o;
  for (int k = 2; k <= 12; ++k) o.require(classify(sphere({k})).is_bad, "teardrop " + std::to_string(k));
  for (int p = 2; p <= 8; ++p) {
    for (int r = p + 1; r <= 9; ++r) o.require(classify(sphere({p, r})).is_bad, "spindle");
  }
  o.require(classify(sphere({2, 3})).is_bad, "S2(2,3)");
  for (int m = 2; m <= 12; ++m) {
    const auto c = classify(plane_with_cones({m}));
    o.require(c.is_good && c.is_aspherical == TriState::yes, "C(" + std::to_string(m) + ")");
  }
  for (const auto& a : {PlanarAction::integer_dihedral(), PlanarAction::sign_flip()}) {
    const auto c = classify(quotient_orbifold(a));
    o.require(c.is_good && c.is_aspherical == TriState::yes, "base orbifold");
  }
  const auto s2 = classify(sphere({}));
  o.require(!s2.is_bad && s2.is_aspherical == TriState::no, "bare sphere");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "q branch data and exact fibers", 1, q_branch_data},
      {2, "case3X simplicial for n = 1..3", 60, case3_simplicial},
      {3, "Zaslavsky count equals enumeration", 120, zaslavsky_agreement},
      {4, "finite-field counts equal chi(q)", 60, finite_field_oracle},
      {5, "case1 complement equals rotation predicate", 60, case1_agreement},
      {6, "fibration map lands in PB(C*)", 30, fibration_map},
      {7, "covering degrees and deck identities", 60, covering_degrees},
      {8, "quasifibration witness b1 pairs", 1, obstruction_pairs},
      {9, "groupoid covering and quotient suite", 120, groupoid_suite},
      {10, "classification table", 1, classification_table},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_s) o = {false, "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget"};
    failed += !o.ok;
    std::printf("%s [%2d] %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
