#include "orbconf/orbit_config.hpp"

namespace orbconf {

bool same_orbit(const PlanarAction& a, const ComplexPoint& z, const ComplexPoint& w, Tolerance tol) {
  if (!a.in_domain(z, tol)) throw DomainError("point " + z.str() + " outside the domain of " + a.name());
  if (!a.in_domain(w, tol)) throw DomainError("point " + w.str() + " outside the domain of " + a.name());
  if (std::holds_alternative<IntegerDihedral>(a.kind())) {
    return is_integer(z - w, tol) || is_integer(z + w, tol);
  }
  return same_point(a.orbit_invariant(z, tol), a.orbit_invariant(w, tol), tol);
}

bool is_orbit_config(const PlanarAction& a, std::span<const ComplexPoint> pts, Tolerance tol) {
  for (const auto& p : pts) {
    if (!a.in_domain(p, tol)) throw DomainError("point " + p.str() + " outside the domain of " + a.name());
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (same_orbit(a, pts[i], pts[j], tol)) return false;
    }
  }
  return true;
}

namespace {
std::uint64_t grid_steps(const Rational& lo, const Rational& hi, const Rational& pitch) {
  if (hi < lo) throw std::invalid_argument("empty sample box");
  const Integer steps = ((hi - lo) / pitch).floor();
  if (!steps.fits_ulong_p()) throw SizeError("sample grid too fine");
  return steps.get_ui();
}
}  // namespace

GridSampler::GridSampler(std::uint64_t seed, const SampleBox& box)
    : rng_(seed),
      box_(box),
      re_steps_(grid_steps(box.re_lo, box.re_hi, box.pitch)),
      im_steps_(grid_steps(box.im_lo, box.im_hi, box.pitch)) {
  if (box.pitch.sign() <= 0) throw std::invalid_argument("grid pitch must be positive");
}

std::uint64_t GridSampler::raw() { return rng_(); }

ComplexPoint GridSampler::next() {
  const std::uint64_t kr = rng_() % (re_steps_ + 1);
  const std::uint64_t ki = rng_() % (im_steps_ + 1);
  return ComplexPoint::exact(box_.re_lo + Rational(kr) * box_.pitch, box_.im_lo + Rational(ki) * box_.pitch);
}

ConfigPoint sample_orbit_config(const PlanarAction& a, int n, std::uint64_t seed, const SampleBox& box) {
  if (n < 1) throw ArityError("configuration needs n >= 1 points");
  GridSampler grid(seed, box);
  const Tolerance tol{};
  for (int attempt = 0; attempt < box.max_attempts; ++attempt) {
    std::vector<ComplexPoint> pts;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      pts.push_back(grid.next());
      ok = a.in_domain(pts.back(), tol);
    }
    if (ok && is_orbit_config(a, pts, tol)) return ConfigPoint{std::move(pts), a, true};
  }
  throw SamplingExhaustedError("no orbit configuration of " + std::to_string(n) + " points found for " + a.name() +
                               " after " + std::to_string(box.max_attempts) + " attempts");
}

namespace {
HyperplaneRow difference_row(int dim, int i, int j, const Cyclotomic& coeff) {
  HyperplaneRow r;
  r.normal.assign(dim, Cyclotomic(0));
  r.normal[i] = 1;
  r.normal[j] = -coeff;
  r.offset = 0;
  return r;
}
}  // namespace

ArrangementSpec case1_arrangement(int n, int m) {
  if (n < 2) throw ArityError("case1 arrangement needs n >= 2");
  if (m < 1) throw InvalidOrderError("case1 arrangement needs m >= 1");
  std::vector<HyperplaneRow> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < m; ++k) rows.push_back(difference_row(n, i, j, Cyclotomic::zeta_power(m, k)));
    }
  }
  return ArrangementSpec(n, FieldTag{m}, "case1(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
                         std::move(rows));
}

ArrangementSpec braid_arrangement(int n) {
  if (n < 1) throw ArityError("braid arrangement needs n >= 1");
  std::vector<HyperplaneRow> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) rows.push_back(difference_row(n, i, j, Cyclotomic(1)));
  }
  return ArrangementSpec(n, FieldTag{1}, "braid(n=" + std::to_string(n) + ")", std::move(rows));
}

ArrangementSpec case3_X_arrangement(int n) {
  if (n < 0) throw ArityError("case3X arrangement needs n >= 0");
  const int d = n + 1;
  std::vector<HyperplaneRow> rows;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      rows.push_back(difference_row(d, i, j, Cyclotomic(1)));
      rows.push_back(difference_row(d, i, j, Cyclotomic(-1)));
    }
  }
  HyperplaneRow first;
  first.normal.assign(d, Cyclotomic(0));
  first.normal[0] = 1;
  first.offset = 0;
  rows.push_back(std::move(first));
  return ArrangementSpec(d, FieldTag{1}, "case3X(n=" + std::to_string(n) + ")", std::move(rows));
}

namespace {
bool pairwise_sign_distinct(std::span<const ComplexPoint> v, std::size_t from, Tolerance tol) {
  for (std::size_t i = from; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (same_point(v[i], v[j], tol) || same_point(v[i], -v[j], tol)) return false;
    }
  }
  return true;
}
}  // namespace

bool in_W(std::span<const ComplexPoint> w, Tolerance tol) {
  const ComplexPoint one(1);
  for (const auto& x : w) {
    if (same_point(x, one, tol) || same_point(x, -one, tol)) return false;
  }
  return pairwise_sign_distinct(w, 0, tol);
}

bool in_X(std::span<const ComplexPoint> x, Tolerance tol) {
  if (x.empty() || is_zero(x[0], tol)) return false;
  return pairwise_sign_distinct(x, 0, tol);
}

std::vector<ComplexPoint> cw_homeomorphism(const ComplexPoint& lambda, std::span<const ComplexPoint> w,
                                           Tolerance tol) {
  if (is_zero(lambda, tol)) throw DomainError("lambda must be nonzero");
  if (!in_W(w, tol)) throw MembershipError("w is not in W");
  std::vector<ComplexPoint> x{lambda};
  for (const auto& wi : w) x.push_back(lambda * wi);
  return x;
}

std::pair<ComplexPoint, std::vector<ComplexPoint>> cw_homeomorphism_inverse(std::span<const ComplexPoint> x,
                                                                            Tolerance tol) {
  if (x.empty()) throw ArityError("x needs at least one coordinate");
  if (is_zero(x[0], tol)) throw DomainError("x_1 must be nonzero");
  if (!in_X(x, tol)) throw MembershipError("x is not in X");
  std::vector<ComplexPoint> w;
  for (std::size_t i = 1; i < x.size(); ++i) w.push_back(x[i] / x[0]);
  return {x[0], std::move(w)};
}

}  // namespace orbconf
