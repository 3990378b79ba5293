#pragma once

// 2-orbifolds (cone points only), their classification, and the planar
// group actions whose quotients are the base orbifolds of the configuration spaces.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbconf/exactfield.hpp"

namespace orbconf {

/// Underlying surface data plus cone points. Reflector lines and corner
/// reflectors are not representable.
struct Orbifold2D {
  int genus = 0;  ///< handles if orientable, crosscaps otherwise
  bool orientable = true;
  int punctures = 0;
  int boundary_circles = 0;
  std::vector<int> cone_orders;  ///< kept sorted ascending

  bool closed() const { return punctures == 0 && boundary_circles == 0; }

  /// Throws InvalidOrbifoldError on negative counts, cone orders below 2, or a
  /// non-orientable surface with no crosscap.
  void validate() const;

  friend bool operator==(const Orbifold2D&, const Orbifold2D&) = default;
};

Orbifold2D make_orbifold(int genus, bool orientable, int punctures, int boundary, std::vector<int> cones);

/// The plane C modelled as a once-punctured sphere, with the given cones.
Orbifold2D plane_with_cones(std::vector<int> cones);

enum class TriState { yes, no, unknown };
std::string to_string(TriState t);

struct Classification {
  bool is_bad = false;
  bool is_good = true;
  TriState pi1_infinite = TriState::unknown;
  TriState is_aspherical = TriState::unknown;
  Rational euler_orb;
  std::vector<std::string> notes;
};

/// chi(underlying surface) - sum (1 - 1/m_i).
Rational euler_characteristic_orb(const Orbifold2D& o);

/// Bad exactly for the teardrop S^2(p) and spindles S^2(p, q) with p != q.
/// Aspherical iff good and not (closed with positive orbifold Euler
/// characteristic).
Classification classify(const Orbifold2D& o);

// --------------------------------------------------------- planar actions

/// Rotation by 2 pi / m about a centre.
struct CyclicRotation {
  int order = 2;
  ComplexPoint center;
};

/// Generated by z -> z + 1 and z -> -z on C.
struct IntegerDihedral {};

/// w -> -w on C minus {+1, -1}; the quotient by w -> w^2 is C minus {1}.
struct SignFlipPunctured {};

struct SpecialPoint {
  ComplexPoint point;
  int isotropy = 1;
};

class PlanarAction {
 public:
  using Kind = std::variant<CyclicRotation, IntegerDihedral, SignFlipPunctured>;

  static PlanarAction rotation(int m, ComplexPoint center = ComplexPoint(0));
  static PlanarAction integer_dihedral();
  static PlanarAction sign_flip();

  const Kind& kind() const { return kind_; }
  std::string name() const;

  /// Group order, or nullopt for infinite groups.
  std::optional<int> group_order() const;

  bool in_domain(const ComplexPoint& z, Tolerance tol) const;
  /// Points removed from C to form the domain.
  std::vector<ComplexPoint> domain_punctures() const;

  /// Points with nontrivial isotropy (one representative per orbit).
  std::vector<SpecialPoint> special_points() const;

  /// A value that agrees on two domain points iff they share an orbit:
  /// (z - c)^m for rotations, w^2 for the sign flip, and a canonical orbit
  /// representative for the dihedral action.
  ComplexPoint orbit_invariant(const ComplexPoint& z, Tolerance tol) const;

 private:
  explicit PlanarAction(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// Quotient orbifold M~/H for a supported action.
Orbifold2D quotient_orbifold(const PlanarAction& a);

}  // namespace orbconf
