#pragma once

// Orbit configuration spaces for the planar actions: membership, a seeded
// rejection sampler, and the finite arrangements used to study them.

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "orbconf/arrangement_spec.hpp"
#include "orbconf/orbmodel.hpp"

namespace orbconf {

bool same_orbit(const PlanarAction& a, const ComplexPoint& z, const ComplexPoint& w, Tolerance tol = {});

/// No two coordinates share an orbit.
bool is_orbit_config(const PlanarAction& a, std::span<const ComplexPoint> pts, Tolerance tol = {});

struct ConfigPoint {
  std::vector<ComplexPoint> points;
  PlanarAction action;
  bool checked = false;  ///< set once is_orbit_config has confirmed membership

  int n() const { return static_cast<int>(points.size()); }
};

/// Rectangle [re_lo, re_hi] x [im_lo, im_hi] sampled on a grid of the given pitch.
struct SampleBox {
  Rational re_lo{-3};
  Rational re_hi{3};
  Rational im_lo{-3};
  Rational im_hi{3};
  Rational pitch{Rational(1, 8)};
  int max_attempts = 10000;
};

/// Deterministic for fixed (seed, n, box). Throws SamplingExhaustedError.
ConfigPoint sample_orbit_config(const PlanarAction& a, int n, std::uint64_t seed, const SampleBox& box = {});

/// One uniformly drawn exact grid point of the box.
class GridSampler {
 public:
  GridSampler(std::uint64_t seed, const SampleBox& box);
  ComplexPoint next();
  std::uint64_t raw();

 private:
  std::mt19937_64 rng_;
  SampleBox box_;
  std::uint64_t re_steps_;
  std::uint64_t im_steps_;
};

/// Hyperplanes z_i = zeta_m^k z_j (i < j, 0 <= k < m) in C^n over Q(zeta_m).
ArrangementSpec case1_arrangement(int n, int m);

/// Hyperplanes x_i = x_j (i < j) in dimension n.
ArrangementSpec braid_arrangement(int n);

/// Hyperplanes x_i = +-x_j (i < j) and x_1 = 0 in dimension n + 1.
ArrangementSpec case3_X_arrangement(int n);

/// w_i != +-w_j for i != j and w_k != +-1.
bool in_W(std::span<const ComplexPoint> w, Tolerance tol = {});
/// x_i != +-x_j for i != j and x_1 != 0.
bool in_X(std::span<const ComplexPoint> x, Tolerance tol = {});

/// (lambda, w) -> (lambda, lambda w_1, ..., lambda w_n).
std::vector<ComplexPoint> cw_homeomorphism(const ComplexPoint& lambda, std::span<const ComplexPoint> w,
                                           Tolerance tol = {});
/// x -> (x_1, (x_2 / x_1, ..., x_{n+1} / x_1)).
std::pair<ComplexPoint, std::vector<ComplexPoint>> cw_homeomorphism_inverse(std::span<const ComplexPoint> x,
                                                                            Tolerance tol = {});

}  // namespace orbconf
