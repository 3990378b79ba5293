#include "orbconf/orbmodel.hpp"

#include <algorithm>
#include <cmath>

namespace orbconf {

void Orbifold2D::validate() const {
  if (genus < 0) throw InvalidOrbifoldError("genus must be >= 0");
  if (!orientable && genus < 1) throw InvalidOrbifoldError("a non-orientable surface needs at least one crosscap");
  if (punctures < 0) throw InvalidOrbifoldError("punctures must be >= 0");
  if (boundary_circles < 0) throw InvalidOrbifoldError("boundary circles must be >= 0");
  for (int m : cone_orders) {
    if (m < 2) throw InvalidOrbifoldError("cone order " + std::to_string(m) + " is below 2");
  }
}

Orbifold2D make_orbifold(int genus, bool orientable, int punctures, int boundary, std::vector<int> cones) {
  std::sort(cones.begin(), cones.end());
  Orbifold2D o{genus, orientable, punctures, boundary, std::move(cones)};
  o.validate();
  return o;
}

Orbifold2D plane_with_cones(std::vector<int> cones) { return make_orbifold(0, true, 1, 0, std::move(cones)); }

std::string to_string(TriState t) {
  switch (t) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    case TriState::unknown:
      break;
  }
  return "unknown";
}

Rational euler_characteristic_orb(const Orbifold2D& o) {
  o.validate();
  Rational chi = o.orientable ? Rational(2 - 2 * o.genus) : Rational(2 - o.genus);
  chi -= Rational(o.punctures + o.boundary_circles);
  for (int m : o.cone_orders) chi -= Rational(1) - Rational(1, m);
  return chi;
}

Classification classify(const Orbifold2D& o) {
  Classification c;
  c.euler_orb = euler_characteristic_orb(o);

  const bool sphere = o.closed() && o.orientable && o.genus == 0;
  const auto& cones = o.cone_orders;
  c.is_bad = sphere && (cones.size() == 1 || (cones.size() == 2 && cones[0] != cones[1]));
  c.is_good = !c.is_bad;

  const bool positive = c.euler_orb.sign() > 0;
  if (!positive) {
    c.pi1_infinite = TriState::yes;
  } else if (o.closed()) {
    // spherical quotient (good) or teardrop/spindle (finite cyclic)
    c.pi1_infinite = TriState::no;
  } else if (o.orientable && o.genus == 0 && o.punctures + o.boundary_circles == 1 && cones.size() <= 1) {
    // a disc with at most one cone point: trivial or finite cyclic group
    c.pi1_infinite = TriState::no;
  } else {
    c.pi1_infinite = TriState::unknown;
    c.notes.push_back("outside the decision table for the orbifold fundamental group");
  }

  c.is_aspherical = (c.is_good && !(o.closed() && positive)) ? TriState::yes : TriState::no;
  if (c.is_bad) c.notes.push_back("bad orbifold: not covered by a manifold");
  return c;
}

// --------------------------------------------------------- PlanarAction

PlanarAction PlanarAction::rotation(int m, ComplexPoint center) {
  if (m < 2) throw UnsupportedActionError("rotation order must be >= 2");
  return PlanarAction(CyclicRotation{m, std::move(center)});
}

PlanarAction PlanarAction::integer_dihedral() { return PlanarAction(IntegerDihedral{}); }

PlanarAction PlanarAction::sign_flip() { return PlanarAction(SignFlipPunctured{}); }

std::string PlanarAction::name() const {
  if (const auto* r = std::get_if<CyclicRotation>(&kind_)) {
    return "rotation(m=" + std::to_string(r->order) + ", center=" + r->center.str() + ")";
  }
  if (std::holds_alternative<IntegerDihedral>(kind_)) return "integer_dihedral";
  return "sign_flip";
}

std::optional<int> PlanarAction::group_order() const {
  if (const auto* r = std::get_if<CyclicRotation>(&kind_)) return r->order;
  if (std::holds_alternative<SignFlipPunctured>(kind_)) return 2;
  return std::nullopt;
}

std::vector<ComplexPoint> PlanarAction::domain_punctures() const {
  if (std::holds_alternative<SignFlipPunctured>(kind_)) return {ComplexPoint(1), ComplexPoint(-1)};
  return {};
}

bool PlanarAction::in_domain(const ComplexPoint& z, Tolerance tol) const {
  const auto holes = domain_punctures();
  return std::none_of(holes.begin(), holes.end(), [&](const ComplexPoint& p) { return same_point(z, p, tol); });
}

std::vector<SpecialPoint> PlanarAction::special_points() const {
  if (const auto* r = std::get_if<CyclicRotation>(&kind_)) return {{r->center, r->order}};
  if (std::holds_alternative<IntegerDihedral>(kind_)) {
    return {{ComplexPoint(0), 2}, {ComplexPoint::exact(Rational(1, 2)), 2}};
  }
  return {{ComplexPoint(0), 2}};
}

namespace {

// Canonical representative of the orbit of z under z -> +-z + k.
ComplexPoint dihedral_representative(const ComplexPoint& z, Tolerance tol) {
  if (z.is_exact()) {
    GaussianRational g = z.gaussian();
    if (g.im.sign() < 0) g = -g;
    g.re -= Rational(g.re.floor());
    if (g.im.is_zero() && g.re > Rational(1, 2)) g.re = Rational(1) - g.re;
    return ComplexPoint(g);
  }
  std::complex<double> w = z.numeric();
  if (w.imag() < -tol.eps) w = -w;
  double re = w.real() - std::floor(w.real());
  if (re > 1.0 - tol.eps) re = 0.0;
  if (std::abs(w.imag()) <= tol.eps) {
    if (re > 0.5) re = 1.0 - re;
    return ComplexPoint::approx({re, 0.0});
  }
  return ComplexPoint::approx({re, w.imag()});
}

}  // namespace

ComplexPoint PlanarAction::orbit_invariant(const ComplexPoint& z, Tolerance tol) const {
  if (!in_domain(z, tol)) throw DomainError("point " + z.str() + " outside the domain of " + name());
  if (const auto* r = std::get_if<CyclicRotation>(&kind_)) return (z - r->center).pow(r->order);
  if (std::holds_alternative<SignFlipPunctured>(kind_)) return z * z;
  return dihedral_representative(z, tol);
}

Orbifold2D quotient_orbifold(const PlanarAction& a) {
  std::vector<int> cones;
  for (const auto& sp : a.special_points()) cones.push_back(sp.isotropy);
  if (std::holds_alternative<SignFlipPunctured>(a.kind())) {
    // C minus {1}: a sphere with two punctures
    return make_orbifold(0, true, 2, 0, std::move(cones));
  }
  return plane_with_cones(std::move(cones));
}

}  // namespace orbconf
