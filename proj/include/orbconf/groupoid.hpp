#pragma once

// Finite groups, finite group actions and finite groupoids: translation
// groupoids, orbit spaces, configuration groupoids, and the covering and
// equivalence predicates, discretized to set-level conditions.

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace orbconf {

using Permutation = std::vector<int>;

/// Elements 0..order-1 with 0 the identity and a dense multiplication table.
class FiniteGroup {
 public:
  /// Validates closure, identity 0, inverses and associativity.
  static FiniteGroup from_table(std::vector<std::vector<int>> table);
  /// The permutation group generated by `gens`, elements sorted lexicographically.
  static FiniteGroup from_permutations(const std::vector<Permutation>& gens, int degree);
  static FiniteGroup cyclic(int n);
  /// Symmetries of the n-gon, order 2n.
  static FiniteGroup dihedral(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  /// Permutations realizing each element, when built from permutations.
  const std::vector<Permutation>& permutations() const { return perms_; }

  /// Sorted closure of `gens` under multiplication.
  std::vector<int> generated(const std::vector<int>& gens) const;
  bool is_subgroup(const std::vector<int>& sub) const;
  bool is_normal(const std::vector<int>& sub) const;
  /// Every subgroup, each sorted; ordered by size then lexicographically.
  std::vector<std::vector<int>> subgroups() const;
  std::vector<std::vector<int>> normal_subgroups() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<Permutation> perms_;
};

/// Left action: act[g][x] = g.x.
class GroupAction {
 public:
  /// Throws ActionError unless every row is a permutation, the identity acts
  /// trivially and act[gh] = act[g] o act[h].
  GroupAction(FiniteGroup group, std::vector<std::vector<int>> act);

  static GroupAction regular(const FiniteGroup& g);
  static GroupAction trivial(const FiniteGroup& g, int points);
  /// The permutation group generated on `points` acting tautologically.
  static GroupAction from_permutations(const std::vector<Permutation>& gens, int points);
  /// Disjoint union, the second copy's points shifted by a.points().
  static GroupAction disjoint_union(const GroupAction& a, const GroupAction& b);
  /// Action on the left cosets G/K.
  static GroupAction cosets(const FiniteGroup& g, const std::vector<int>& k);

  const FiniteGroup& group() const { return group_; }
  int points() const { return points_; }
  int apply(int g, int x) const { return act_[g][x]; }
  const std::vector<std::vector<int>>& table() const { return act_; }

  /// Sub-action of a subgroup; element i of the result is sub[i].
  GroupAction restrict_to(const std::vector<int>& sub) const;
  /// Orbit label of every point (labels in order of first appearance).
  std::vector<int> orbit_labels() const;
  std::vector<int> stabilizer(int x) const;

 private:
  FiniteGroup group_;
  int points_ = 0;
  std::vector<std::vector<int>> act_;
};

class FiniteGroupoid {
 public:
  /// `compose(g, f)` gives g o f for s(g) = t(f).
  template <class Compose>
  static FiniteGroupoid build(int objects, std::vector<int> source, std::vector<int> target,
                              std::vector<int> identity, std::vector<int> inverse, Compose&& compose);

  /// Explicit data; `triples` are (g, f, g o f). Throws ParseError on
  /// out-of-range indices or a composable pair without an entry.
  static FiniteGroupoid from_triples(int objects, std::vector<int> source, std::vector<int> target,
                                     std::vector<int> identity, std::vector<int> inverse,
                                     const std::vector<std::array<int, 3>>& triples);

  int objects() const { return objects_; }
  int morphisms() const { return static_cast<int>(source_.size()); }
  int source(int m) const { return source_[m]; }
  int target(int m) const { return target_[m]; }
  int identity(int x) const { return identity_[x]; }
  int inverse(int m) const { return inverse_[m]; }
  /// g o f; throws std::invalid_argument unless s(g) = t(f).
  int compose(int g, int f) const;
  /// Morphisms with source x, ascending.
  const std::vector<int>& out(int x) const { return out_[x]; }

  /// All (g, f, g o f).
  std::vector<std::array<int, 3>> triples() const;

  void set_composition(int g, int f, int h);

  static FiniteGroupoid unit(int objects);

 private:
  void index();

  int objects_ = 0;
  std::vector<int> source_, target_, identity_, inverse_;
  std::vector<std::vector<int>> out_;
  std::vector<int> pos_;                ///< position of m in out_[source(m)]
  std::vector<std::vector<int>> comp_;  ///< comp_[f][pos_[g]] = g o f, -1 when unset
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool passed() const;
  /// First failing check's detail, or empty.
  std::string first_failure() const;
};

/// Ranges, identities, source/target of composites, unit laws,
/// associativity on all composable triples, inverse laws.
CheckReport check_axioms(const FiniteGroupoid& g);

/// Morphism x * |H| + h is (x, h): s = x, t = h.x, (h.x, h') o (x, h) = (x, h'h).
FiniteGroupoid translation_groupoid(const GroupAction& a);

struct OrbitSpace {
  std::vector<std::vector<int>> orbits;  ///< sorted blocks ordered by least element
  std::vector<int> quotient;             ///< object -> block index
};

OrbitSpace orbit_space(const FiniteGroupoid& g);

struct ConfigGroupoid {
  FiniteGroupoid groupoid;
  int n = 0;
  std::vector<std::vector<int>> object_tuples;    ///< lexicographic
  std::vector<std::vector<int>> morphism_tuples;
  bool empty_warning = false;  ///< fewer than n orbits
};

ConfigGroupoid configuration_groupoid(const FiniteGroupoid& g, int n);

struct GroupoidHom {
  FiniteGroupoid source;
  FiniteGroupoid target;
  std::vector<int> f0;
  std::vector<int> f1;
};

CheckReport check_homomorphism(const GroupoidHom& f);

GroupoidHom identity_hom(const FiniteGroupoid& g);

struct ForgetMap {
  ConfigGroupoid upper;
  ConfigGroupoid lower;
  GroupoidHom hom;
};

/// Drops the last coordinate: PB_n(G) -> PB_{n-1}(G). Needs n >= 2.
ForgetMap forget_map(const FiniteGroupoid& g, int n);

/// G(S, H') -> G(S, H) for a subgroup H' of the acting group.
GroupoidHom subgroup_inclusion(const GroupAction& a, const std::vector<int>& sub);

struct Verdict {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Homomorphism, f0 surjective, f0-fibers of equal size along each target
/// orbit, and faithful: eta -> (f1 eta, s eta, t eta) injective.
Verdict is_covering_hom(const GroupoidHom& f);

/// The literal fibered-product form: eta -> (f1 eta, s eta) is a bijection
/// onto {(g, y) : s(g) = f0(y)}.
Verdict is_strict_covering_hom(const GroupoidHom& f);

struct EquivalenceReport {
  Verdict homomorphism;
  Verdict essentially_surjective;  ///< (y, g) with s(g) = f0(y) -> t(g) is onto
  Verdict fully_faithful;          ///< H1 -> (H0 x H0) x_(G0 x G0) G1 is a bijection
  bool ok() const { return homomorphism.ok && essentially_surjective.ok && fully_faithful.ok; }
};

EquivalenceReport is_equivalence(const GroupoidHom& f);

/// Quotient of an action by a normal subgroup N: S/N under Gamma/N.
struct QuotientModel {
  GroupAction action;
  std::vector<int> point_class;    ///< S -> S/N
  std::vector<int> element_class;  ///< Gamma -> Gamma/N
};

/// Throws InvalidModelError unless n is a normal subgroup.
QuotientModel quotient_model(const GroupAction& a, const std::vector<int>& n);

struct MoritaTriple {
  std::vector<int> intersection;
  QuotientModel k_model, g1_model, g2_model;
  FiniteGroupoid k, g1, g2;
  GroupoidHom e1, e2;
};

/// K = G(S/N, Gamma/N) with N = N1 n N2, mapping to G(S/Ni, Gamma/Ni).
/// Throws InvalidModelError unless N1, N2 are normal and each Ni/N acts
/// freely on S/N.
MoritaTriple morita_triple(const GroupAction& a, const std::vector<int>& n1, const std::vector<int>& n2);

// ------------------------------------------------------------------------

template <class Compose>
FiniteGroupoid FiniteGroupoid::build(int objects, std::vector<int> source, std::vector<int> target,
                                     std::vector<int> identity, std::vector<int> inverse, Compose&& compose) {
  FiniteGroupoid g;
  g.objects_ = objects;
  g.source_ = std::move(source);
  g.target_ = std::move(target);
  g.identity_ = std::move(identity);
  g.inverse_ = std::move(inverse);
  g.index();
  for (int f = 0; f < g.morphisms(); ++f) {
    for (int gg : g.out_[g.target_[f]]) g.comp_[f][g.pos_[gg]] = compose(gg, f);
  }
  return g;
}

}  // namespace orbconf
