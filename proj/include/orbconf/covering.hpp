#pragma once

// The explicit covering and fibration maps behind the asphericity argument,
// with exact fibers where the algebra allows and a sampling verifier.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "orbconf/orbit_config.hpp"

namespace orbconf {

/// a + b sqrt(d) over Q(i), with d fixed per value.
struct QuadSurd {
  GaussianRational a;
  GaussianRational b;
  GaussianRational d;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  QuadSurd conj() const { return {a, -b, d}; }
  QuadSurd inverse() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend bool operator==(const QuadSurd& x, const QuadSurd& y);
};

/// q(w) = (1 - (1 + w^2) / (2w)) / 4. Throws DomainError at w = 0.
ComplexPoint q_map(const ComplexPoint& w, Tolerance tol = {});
QuadSurd q_map(const QuadSurd& w);

struct QFiber {
  bool branch = false;              ///< double root, local degree 2
  bool exact = false;               ///< roots certified in exact arithmetic
  std::vector<QuadSurd> surds;      ///< exact roots (exact mode only)
  std::vector<ComplexPoint> points; ///< exact when the roots lie in Q(i)

  std::size_t size() const { return points.size(); }
};

/// Roots of w^2 - (2 - 8v) w + 1 = 0.
QFiber q_fiber(const ComplexPoint& v, Tolerance tol = {});

/// exp(2 pi i z), always approximate.
ComplexPoint exp_cover(const ComplexPoint& z);
/// {z0 + k : |k| <= K} for the principal logarithm z0 of w.
std::vector<ComplexPoint> exp_fiber(const ComplexPoint& w, int window, Tolerance tol = {});

/// Coordinatewise q(exp(2 pi i z)); rejects tuples with z_i +- z_j in Z.
std::vector<ComplexPoint> qE_composite(std::span<const ComplexPoint> z, Tolerance tol = {});

/// Coordinatewise square on W.
std::vector<ComplexPoint> squaring_cover(std::span<const ComplexPoint> w, Tolerance tol = {});
/// Every sign choice of coordinatewise square roots.
std::vector<std::vector<ComplexPoint>> squaring_fiber(std::span<const ComplexPoint> y, Tolerance tol = {});

/// b_j = z_n^m - z_j^m for j < n; checks the result lies in PB_{n-1}(C*).
std::vector<ComplexPoint> fn_fibration_map(std::span<const ComplexPoint> z, int m, Tolerance tol = {});
/// Nonzero and pairwise distinct.
bool in_PB_cstar(std::span<const ComplexPoint> b, Tolerance tol = {});

// ---------------------------------------------------------- verification

struct CoverMapId {
  enum class Kind { q, squaring, qE };
  Kind kind = Kind::q;
  int n = 1;

  std::string str() const;
  /// "q", "squaring(n)" or "qE(n)".
  static CoverMapId parse(const std::string& text);
};

struct CoverPlan {
  int samples = 200;
  std::uint64_t seed = 0;
  int window = 3;
  Tolerance tol{};
  SampleBox box{};
};

struct BranchDatum {
  ComplexPoint value;
  ComplexPoint preimage;
  int local_degree = 1;
  bool verified = false;
};

struct DeckCheck {
  std::string name;
  std::string mode;  ///< "exact" or "approximate"
  int checked = 0;
  int failures = 0;

  bool passed() const { return checked > 0 && failures == 0; }
};

struct CoveringReport {
  std::string map_id;
  long declared_degree = 0;
  std::map<long, int> fiber_sizes;  ///< fiber size -> occurrences (per window cell for qE)
  std::vector<BranchDatum> branch_points;
  std::vector<DeckCheck> deck_checks;
  int generic_samples = 0;
  int skipped_singular = 0;
  std::vector<std::string> failures;
  CoverPlan plan;
  bool pass = false;
};

/// Throws SamplingExhaustedError when generic samples cannot be drawn.
CoveringReport verify_cover(const CoverMapId& id, const CoverPlan& plan = {});

}  // namespace orbconf
