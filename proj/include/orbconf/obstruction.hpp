#pragma once

// Fibers of the coordinate-forgetting map PB_n -> PB_{n-1} over base points
// anchored at a fixed point and at a nearby free point. Different first Betti
// numbers show the map is not a quasifibration.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbconf/groupoid.hpp"
#include "orbconf/orbmodel.hpp"

namespace orbconf {

/// |H| / |H_z|, or nullopt for the infinite orbits of the dihedral action.
std::optional<long> orbit_size(const PlanarAction& a, const ComplexPoint& z, Tolerance tol = {});

struct FiberDescriptor {
  std::vector<ComplexPoint> base;
  std::vector<long> orbit_sizes;
  long punctures = 0;         ///< sum of orbit sizes
  long domain_punctures = 0;  ///< points already missing from the domain
  long b1 = 0;                ///< first Betti number of the planar fiber
};

/// Throws UnsupportedActionError for infinite groups and MembershipError
/// when the base is not an orbit configuration.
FiberDescriptor fiber_descriptor(const PlanarAction& a, std::span<const ComplexPoint> base, Tolerance tol = {});

enum class ObstructionVerdict { not_quasifibration, inconclusive };
std::string to_string(ObstructionVerdict v);

struct WitnessReport {
  std::string action;
  int n = 0;
  ComplexPoint s;        ///< point with nontrivial isotropy
  ComplexPoint s_prime;  ///< nearby free point
  FiberDescriptor at_fixed;
  FiberDescriptor at_free;
  ObstructionVerdict verdict = ObstructionVerdict::inconclusive;
  std::string narrative;
};

/// Bases (s, x_2, ..., x_{n-1}) and (s', x_2, ..., x_{n-1}).
WitnessReport quasifibration_witness(const PlanarAction& a, int n);

// ------------------------------------------------ finite permutation models

/// Discrete fiber: the points of S outside the orbits of the base.
struct FiniteFiberDescriptor {
  std::vector<int> base;
  std::vector<int> orbit_sizes;
  int removed = 0;
  int cardinality = 0;  ///< rank of H_0 of the fiber
};

struct FiniteWitnessReport {
  int n = 0;
  int s = 0;
  int s_prime = 0;
  FiniteFiberDescriptor at_fixed;
  FiniteFiberDescriptor at_free;
  ObstructionVerdict verdict = ObstructionVerdict::inconclusive;
  std::string narrative;
};

FiniteFiberDescriptor finite_fiber_descriptor(const GroupAction& a, const std::vector<int>& base);

/// Throws NoWitnessError when no point has nontrivial isotropy, when every
/// orbit has the same size, or when there are too few orbits for n.
FiniteWitnessReport finite_quasifibration_witness(const GroupAction& a, int n);

}  // namespace orbconf
