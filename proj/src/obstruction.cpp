#include "orbconf/obstruction.hpp"

#include <set>

#include "orbconf/orbit_config.hpp"

namespace orbconf {

std::optional<long> orbit_size(const PlanarAction& a, const ComplexPoint& z, Tolerance tol) {
  if (!a.in_domain(z, tol)) throw DomainError("point " + z.str() + " outside the domain of " + a.name());
  if (std::holds_alternative<IntegerDihedral>(a.kind())) return std::nullopt;
  const long order = *a.group_order();
  for (const auto& sp : a.special_points()) {
    if (same_point(sp.point, z, tol)) return order / sp.isotropy;
  }
  return order;
}

FiberDescriptor fiber_descriptor(const PlanarAction& a, std::span<const ComplexPoint> base, Tolerance tol) {
  if (!a.group_order()) throw UnsupportedActionError(a.name() + " has infinite orbits");
  if (!is_orbit_config(a, base, tol)) throw MembershipError("base is not an orbit configuration");
  FiberDescriptor d;
  d.base.assign(base.begin(), base.end());
  for (const auto& z : base) {
    d.orbit_sizes.push_back(*orbit_size(a, z, tol));
    d.punctures += d.orbit_sizes.back();
  }
  d.domain_punctures = static_cast<long>(a.domain_punctures().size());
  d.b1 = d.punctures + d.domain_punctures;
  return d;
}

std::string to_string(ObstructionVerdict v) {
  return v == ObstructionVerdict::not_quasifibration ? "not-quasifibration" : "inconclusive";
}

WitnessReport quasifibration_witness(const PlanarAction& a, int n) {
  if (n < 2) throw ArityError("witness needs n >= 2");
  if (!a.group_order()) throw UnsupportedActionError(a.name() + " is an infinite group; the witness needs a finite one");
  const auto special = a.special_points();
  if (special.empty()) throw NoWitnessError(a.name() + " has no point with nontrivial isotropy");

  WitnessReport r;
  r.action = a.name();
  r.n = n;
  r.s = special.front().point;
  r.s_prime = r.s + ComplexPoint::exact(Rational(1, 8));
  std::vector<ComplexPoint> fixed{r.s}, free{r.s_prime};
  for (int i = 2; i < n; ++i) {
    const ComplexPoint x = r.s + ComplexPoint(i);
    fixed.push_back(x);
    free.push_back(x);
  }
  r.at_fixed = fiber_descriptor(a, fixed);
  r.at_free = fiber_descriptor(a, free);
  r.verdict = r.at_fixed.b1 != r.at_free.b1 ? ObstructionVerdict::not_quasifibration : ObstructionVerdict::inconclusive;
  std::string tuple = "(s";
  if (n == 3) tuple += ", x_2";
  if (n > 3) tuple += ", x_2, ..., x_" + std::to_string(n - 1);
  r.narrative = "choose x = " + tuple + ") with s = " + r.s.str() +
                " fixed by a nontrivial isotropy group, and x' with s replaced by the free point s' = " +
                r.s_prime.str() + "; the fibers over x and x' have b1 = " + std::to_string(r.at_fixed.b1) + " and b1 = " +
                std::to_string(r.at_free.b1) +
                (r.verdict == ObstructionVerdict::not_quasifibration
                     ? ", so they are not weakly homotopy equivalent and the map is not a quasifibration"
                     : ", which gives no obstruction");
  return r;
}

FiniteFiberDescriptor finite_fiber_descriptor(const GroupAction& a, const std::vector<int>& base) {
  const auto labels = a.orbit_labels();
  std::vector<int> size(a.points(), 0);
  for (int l : labels) ++size[l];
  FiniteFiberDescriptor d;
  d.base = base;
  std::set<int> seen;
  for (int x : base) {
    if (x < 0 || x >= a.points()) throw MembershipError("base point out of range");
    if (!seen.insert(labels[x]).second) throw MembershipError("base points share an orbit");
    d.orbit_sizes.push_back(size[labels[x]]);
    d.removed += size[labels[x]];
  }
  d.cardinality = a.points() - d.removed;
  return d;
}

FiniteWitnessReport finite_quasifibration_witness(const GroupAction& a, int n) {
  if (n < 2) throw ArityError("witness needs n >= 2");
  const auto labels = a.orbit_labels();
  std::vector<int> size(a.points(), 0);
  for (int l : labels) ++size[l];

  int s = -1;
  for (int x = 0; x < a.points() && s < 0; ++x) {
    if (a.stabilizer(x).size() > 1) s = x;
  }
  if (s < 0) throw NoWitnessError("the action is free: no point has nontrivial isotropy");
  int s_prime = -1;
  for (int x = 0; x < a.points(); ++x) {
    if (size[labels[x]] != size[labels[s]] && (s_prime < 0 || size[labels[x]] > size[labels[s_prime]])) s_prime = x;
  }
  if (s_prime < 0) throw NoWitnessError("every orbit has the same size");

  std::vector<int> rest;
  std::set<int> used{labels[s], labels[s_prime]};
  for (int x = 0; x < a.points() && static_cast<int>(rest.size()) < n - 2; ++x) {
    if (used.insert(labels[x]).second) rest.push_back(x);
  }
  if (static_cast<int>(rest.size()) < n - 2) throw NoWitnessError("too few orbits for n = " + std::to_string(n));

  FiniteWitnessReport r;
  r.n = n;
  r.s = s;
  r.s_prime = s_prime;
  std::vector<int> fixed{s}, free{s_prime};
  fixed.insert(fixed.end(), rest.begin(), rest.end());
  free.insert(free.end(), rest.begin(), rest.end());
  r.at_fixed = finite_fiber_descriptor(a, fixed);
  r.at_free = finite_fiber_descriptor(a, free);
  r.verdict = r.at_fixed.cardinality != r.at_free.cardinality ? ObstructionVerdict::not_quasifibration
                                                              : ObstructionVerdict::inconclusive;
  r.narrative = "fiber over the base through point " + std::to_string(s) + " (isotropy " +
                std::to_string(a.stabilizer(s).size()) + ") has " + std::to_string(r.at_fixed.cardinality) +
                " points; through point " + std::to_string(s_prime) + " it has " +
                std::to_string(r.at_free.cardinality);
  return r;
}

}  // namespace orbconf
