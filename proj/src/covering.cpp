#include "orbconf/covering.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orbconf {

namespace {

const GaussianRational& common_d(const QuadSurd& x, const QuadSurd& y) {
  if (x.b.is_zero()) return y.d;
  if (y.b.is_zero() || x.d == y.d) return x.d;
  throw std::invalid_argument("surds with different radicands");
}

// |a - b| <= eps * max(1, |a|, |b|)
bool near(std::complex<double> a, std::complex<double> b, double eps) {
  return std::abs(a - b) <= eps * std::max({1.0, std::abs(a), std::abs(b)});
}

constexpr std::complex<double> two_pi_i{0.0, 2.0 * std::numbers::pi};

bool same_tuple(std::span<const ComplexPoint> a, std::span<const ComplexPoint> b, Tolerance tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_point(a[i], b[i], tol)) return false;
  }
  return true;
}

}  // namespace

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  const auto d = common_d(x, y);
  return {x.a + y.a, x.b + y.b, d};
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) {
  const auto d = common_d(x, y);
  return {x.a - y.a, x.b - y.b, d};
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  const auto d = common_d(x, y);
  return {x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d};
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
  if (x.b.is_zero() && y.b.is_zero()) return x.a == y.a;
  return x.a == y.a && x.b == y.b && x.d == y.d;
}

QuadSurd QuadSurd::inverse() const {
  const GaussianRational n = a * a - b * b * d;
  if (n.is_zero()) throw DivisionByZeroError("surd has zero norm");
  const GaussianRational inv = n.inverse();
  return {a * inv, -b * inv, d};
}

std::complex<double> QuadSurd::to_complex() const {
  return a.to_complex() + b.to_complex() * std::sqrt(d.to_complex());
}

std::string QuadSurd::str() const {
  if (b.is_zero()) return a.str();
  return a.str() + " + " + b.str() + "*sqrt(" + d.str() + ")";
}

ComplexPoint q_map(const ComplexPoint& w, Tolerance tol) {
  if (is_zero(w, tol)) throw DomainError("q is undefined at w = 0");
  const ComplexPoint one(1);
  return (one - (one + w * w) / (ComplexPoint(2) * w)) / ComplexPoint(4);
}

QuadSurd q_map(const QuadSurd& w) {
  if (w.is_zero()) throw DomainError("q is undefined at w = 0");
  const QuadSurd one{GaussianRational(1), GaussianRational(0), w.d};
  const QuadSurd two{GaussianRational(2), GaussianRational(0), w.d};
  const QuadSurd quarter{GaussianRational(Rational(1, 4)), GaussianRational(0), w.d};
  return quarter * (one - (one + w * w) * (two * w).inverse());
}

QFiber q_fiber(const ComplexPoint& v, Tolerance tol) {
  QFiber f;
  if (!v.is_exact()) {
    const std::complex<double> B = 2.0 - 8.0 * v.numeric();
    const std::complex<double> D = B * B - 4.0;
    if (std::abs(D) <= tol.eps) {
      f.branch = true;
      f.points.push_back(ComplexPoint::approx(B / 2.0));
    } else {
      // larger root without cancellation; the other is its reciprocal
      const std::complex<double> s = std::sqrt(D);
      const std::complex<double> big = std::abs(B + s) >= std::abs(B - s) ? (B + s) / 2.0 : (B - s) / 2.0;
      f.points.push_back(ComplexPoint::approx(big));
      f.points.push_back(ComplexPoint::approx(1.0 / big));
    }
    return f;
  }

  f.exact = true;
  const GaussianRational B = GaussianRational(2) - GaussianRational(8) * v.gaussian();
  const GaussianRational D = B * B - GaussianRational(4);
  const GaussianRational half(Rational(1, 2));
  if (D.is_zero()) {
    f.branch = true;
    f.surds.push_back({B * half, GaussianRational(0), D});
  } else if (auto s = exact_sqrt(D)) {
    f.surds.push_back({(B + *s) * half, GaussianRational(0), D});
    f.surds.push_back({(B - *s) * half, GaussianRational(0), D});
  } else {
    f.surds.push_back({B * half, half, D});
    f.surds.push_back({B * half, -half, D});
  }
  for (const auto& r : f.surds) {
    if (q_map(r) != QuadSurd{v.gaussian(), GaussianRational(0), D}) {
      throw std::logic_error("q fiber root " + r.str() + " does not map to " + v.str());
    }
    f.points.push_back(r.b.is_zero() ? ComplexPoint(r.a) : ComplexPoint::approx(r.to_complex()));
  }
  return f;
}

ComplexPoint exp_cover(const ComplexPoint& z) { return ComplexPoint::approx(std::exp(two_pi_i * z.numeric())); }

std::vector<ComplexPoint> exp_fiber(const ComplexPoint& w, int window, Tolerance tol) {
  if (is_zero(w, tol)) throw DomainError("exp never takes the value 0");
  if (window < 0) throw std::invalid_argument("window must be >= 0");
  std::vector<ComplexPoint> out;
  // log 1 = 0 exactly, so exact integers come back for w = 1
  const bool unit = w.is_exact() && w.gaussian() == GaussianRational(1);
  const std::complex<double> z0 = unit ? 0.0 : std::log(w.numeric()) / two_pi_i;
  for (int k = -window; k <= window; ++k) {
    out.push_back(unit ? ComplexPoint(k) : ComplexPoint::approx(z0 + static_cast<double>(k)));
  }
  return out;
}

std::vector<ComplexPoint> qE_composite(std::span<const ComplexPoint> z, Tolerance tol) {
  if (!is_orbit_config(PlanarAction::integer_dihedral(), z, tol)) {
    throw DomainError("z_i +- z_j lies in Z for some i != j");
  }
  std::vector<ComplexPoint> out;
  for (const auto& zi : z) out.push_back(q_map(exp_cover(zi), tol));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (near(out[i].numeric(), out[j].numeric(), tol.eps)) {
        throw DomainError("images of coordinates " + std::to_string(i) + " and " + std::to_string(j) +
                          " agree to tolerance");
      }
    }
  }
  return out;
}

std::vector<ComplexPoint> squaring_cover(std::span<const ComplexPoint> w, Tolerance tol) {
  if (!in_W(w, tol)) throw DomainError("w is not in W");
  std::vector<ComplexPoint> out;
  for (const auto& x : w) out.push_back(x * x);
  return out;
}

std::vector<std::vector<ComplexPoint>> squaring_fiber(std::span<const ComplexPoint> y, Tolerance tol) {
  std::vector<std::vector<ComplexPoint>> roots;
  for (const auto& c : y) {
    std::optional<ComplexPoint> r;
    if (c.is_exact()) {
      if (auto s = exact_sqrt(c.gaussian())) r = ComplexPoint(*s);
    }
    if (!r) r = ComplexPoint::approx(std::sqrt(c.numeric()));
    if (is_zero(*r, tol)) {
      roots.push_back({*r});
    } else {
      roots.push_back({*r, -*r});
    }
  }
  std::vector<std::vector<ComplexPoint>> out{{}};
  for (const auto& choices : roots) {
    std::vector<std::vector<ComplexPoint>> next;
    for (const auto& prefix : out) {
      for (const auto& r : choices) {
        auto t = prefix;
        t.push_back(r);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool in_PB_cstar(std::span<const ComplexPoint> b, Tolerance tol) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (is_zero(b[i], tol)) return false;
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (same_point(b[i], b[j], tol)) return false;
    }
  }
  return true;
}

std::vector<ComplexPoint> fn_fibration_map(std::span<const ComplexPoint> z, int m, Tolerance tol) {
  if (z.size() < 2) throw ArityError("fibration map needs n >= 2");
  if (m < 1) throw InvalidOrderError("m must be >= 1");
  std::vector<ComplexPoint> powers;
  for (const auto& zi : z) powers.push_back(zi.pow(m));
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (std::size_t j = i + 1; j < powers.size(); ++j) {
      if (same_point(powers[i], powers[j], tol)) {
        throw DomainError("z_" + std::to_string(i + 1) + "^m = z_" + std::to_string(j + 1) + "^m");
      }
    }
  }
  std::vector<ComplexPoint> b;
  for (std::size_t j = 0; j + 1 < powers.size(); ++j) b.push_back(powers.back() - powers[j]);
  if (!in_PB_cstar(b, tol)) throw std::logic_error("fibration image left PB_{n-1}(C*)");
  return b;
}

// ---------------------------------------------------------- verification

std::string CoverMapId::str() const {
  switch (kind) {
    case Kind::q:
      return "q";
    case Kind::squaring:
      return "squaring(" + std::to_string(n) + ")";
    case Kind::qE:
      return "qE(" + std::to_string(n) + ")";
  }
  return "?";
}

CoverMapId CoverMapId::parse(const std::string& text) {
  if (text == "q") return {Kind::q, 1};
  auto with_arg = [&](const std::string& head, Kind k) -> std::optional<CoverMapId> {
    if (text.rfind(head + "(", 0) != 0 || text.back() != ')') return std::nullopt;
    const std::string arg = text.substr(head.size() + 1, text.size() - head.size() - 2);
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(arg, &used);
    } catch (const std::exception&) {
      throw ParseError("bad map argument in '" + text + "'");
    }
    if (used != arg.size() || n < 1) throw ParseError("bad map argument in '" + text + "'");
    return CoverMapId{k, n};
  };
  if (auto id = with_arg("squaring", Kind::squaring)) return *id;
  if (auto id = with_arg("qE", Kind::qE)) return *id;
  throw ParseError("unknown map id '" + text + "' (expected q, squaring(n) or qE(n))");
}

namespace {

class Verifier {
 public:
  Verifier(const CoverMapId& id, const CoverPlan& plan) : id_(id), plan_(plan), grid_(plan.seed, plan.box) {
    report_.map_id = id.str();
    report_.plan = plan;
  }

  CoveringReport run() {
    switch (id_.kind) {
      case CoverMapId::Kind::q:
        run_q();
        break;
      case CoverMapId::Kind::squaring:
        run_squaring();
        break;
      case CoverMapId::Kind::qE:
        run_qE();
        break;
    }
    bool ok = report_.failures.empty() && report_.generic_samples == plan_.samples;
    for (const auto& [size, count] : report_.fiber_sizes) ok = ok && size == report_.declared_degree;
    for (const auto& b : report_.branch_points) ok = ok && b.verified;
    for (const auto& d : report_.deck_checks) ok = ok && d.passed();
    report_.pass = ok;
    return std::move(report_);
  }

 private:
  void fail(const std::string& what) {
    if (report_.failures.size() < 20) report_.failures.push_back(what);
  }

  int attempt_cap() const { return plan_.samples * 50 + plan_.box.max_attempts; }

  ComplexPoint draw_nonzero() {
    for (int attempt = 0; attempt < attempt_cap(); ++attempt) {
      auto w = grid_.next();
      if (!w.gaussian().is_zero()) return w;
    }
    throw SamplingExhaustedError("no nonzero grid point in the sample box");
  }

  // q(w) = q(1/w) in exact arithmetic
  DeckCheck q_inversion_check() {
    DeckCheck d{"q(w) = q(1/w)", "exact"};
    for (int s = 0; s < plan_.samples; ++s) {
      const ComplexPoint w = draw_nonzero();
      ++d.checked;
      if (!(q_map(w).gaussian() == q_map(ComplexPoint(1) / w).gaussian())) {
        ++d.failures;
        fail("q(w) != q(1/w) at w = " + w.str());
      }
    }
    return d;
  }

  void add_q_branch_data() {
    // q'(w) = -(1 - 1/w^2) / 8 vanishes exactly at the double roots
    for (const auto& [value, pre] : {std::pair{Rational(0), Rational(1)}, std::pair{Rational(1, 2), Rational(-1)}}) {
      const ComplexPoint v = ComplexPoint::exact(value);
      const ComplexPoint w = ComplexPoint::exact(pre);
      const QFiber f = q_fiber(v);
      const GaussianRational deriv =
          -(GaussianRational(1) - (w.gaussian() * w.gaussian()).inverse()) * GaussianRational(Rational(1, 8));
      BranchDatum b{v, w, 2, false};
      b.verified = f.exact && f.branch && f.size() == 1 && f.points[0].is_exact() &&
                   f.points[0].gaussian() == w.gaussian() && q_map(w).gaussian() == v.gaussian() && deriv.is_zero();
      if (!b.verified) fail("branch datum q(" + w.str() + ") = " + v.str() + " not certified");
      report_.branch_points.push_back(std::move(b));
    }
  }

  void run_q() {
    report_.declared_degree = 2;
    add_q_branch_data();
    DeckCheck swap{"fiber roots exchanged by w -> 1/w", "exact"};
    const GaussianRational half(Rational(1, 2));
    int attempts = 0;
    while (report_.generic_samples < plan_.samples) {
      if (++attempts > attempt_cap()) throw SamplingExhaustedError("q: too few generic samples");
      const ComplexPoint v = grid_.next();
      if (v.gaussian() == GaussianRational(0) || v.gaussian() == half) {
        ++report_.skipped_singular;
        continue;
      }
      ++report_.generic_samples;
      const QFiber f = q_fiber(v);
      ++report_.fiber_sizes[static_cast<long>(f.size())];
      if (f.branch || f.size() != 2) {
        fail("fiber over " + v.str() + " has " + std::to_string(f.size()) + " points");
        continue;
      }
      ++swap.checked;
      const QuadSurd product = f.surds[0] * f.surds[1];
      if (!(product == QuadSurd{GaussianRational(1), GaussianRational(0), f.surds[0].d}) ||
          f.surds[0] == f.surds[1]) {
        ++swap.failures;
        fail("fiber roots over " + v.str() + " are not reciprocal and distinct");
      }
    }
    report_.deck_checks.push_back(swap);
    report_.deck_checks.push_back(q_inversion_check());
  }

  void run_squaring() {
    const int n = id_.n;
    report_.declared_degree = 1L << n;
    {
      const ComplexPoint zero(0);
      const auto f = squaring_fiber(std::vector<ComplexPoint>{zero}, plan_.tol);
      BranchDatum b{zero, zero, 2, f.size() == 1 && f[0][0].is_exact() && f[0][0].gaussian().is_zero()};
      if (!b.verified) fail("branch datum 0 -> 0 not certified");
      report_.branch_points.push_back(std::move(b));
    }
    DeckCheck flips{"coordinate sign flips preserve the image", "exact"};
    int attempts = 0;
    while (report_.generic_samples < plan_.samples) {
      if (++attempts > attempt_cap()) throw SamplingExhaustedError("squaring: too few generic samples");
      std::vector<ComplexPoint> w;
      for (int k = 0; k < n; ++k) w.push_back(grid_.next());
      if (!in_W(w, plan_.tol)) continue;
      if (std::any_of(w.begin(), w.end(), [](const ComplexPoint& x) { return x.gaussian().is_zero(); })) {
        ++report_.skipped_singular;
        continue;
      }
      ++report_.generic_samples;
      const auto y = squaring_cover(w, plan_.tol);
      const auto fiber = squaring_fiber(y, plan_.tol);
      ++report_.fiber_sizes[static_cast<long>(fiber.size())];
      bool found = false;
      for (const auto& pre : fiber) {
        const bool exact = std::all_of(pre.begin(), pre.end(), [](const ComplexPoint& x) { return x.is_exact(); });
        if (!exact || !in_W(pre, plan_.tol) || !same_tuple(squaring_cover(pre, plan_.tol), y, plan_.tol)) {
          fail("fiber point over " + y[0].str() + ", ... is not an exact preimage in W");
        }
        found = found || same_tuple(pre, w, plan_.tol);
      }
      if (!found) fail("sampled point missing from its own fiber");
      for (int k = 0; k < n; ++k) {
        auto flipped = w;
        flipped[k] = -flipped[k];
        ++flips.checked;
        if (!same_tuple(squaring_cover(flipped, plan_.tol), y, plan_.tol)) ++flips.failures;
      }
    }
    report_.deck_checks.push_back(flips);
  }

  void run_qE() {
    const int n = id_.n;
    const int K = plan_.window;
    const double eps = plan_.tol.eps;
    report_.declared_degree = 1L << n;
    add_q_branch_data();
    {
      const ComplexPoint zero(0);
      BranchDatum b{zero, zero, 2, false};
      b.verified = near(exp_cover(zero).numeric(), 1.0, eps) && q_fiber(ComplexPoint(0)).branch;
      report_.branch_points.push_back(std::move(b));
    }

    DeckCheck shift{"z_k -> z_k + 1 preserves Q o E", "approximate"};
    DeckCheck negate{"z_k -> -z_k preserves Q o E", "approximate"};
    DeckCheck period{"exp(2 pi i (z + 1)) = exp(2 pi i z)", "approximate"};
    const PlanarAction dihedral = PlanarAction::integer_dihedral();
    int attempts = 0;
    while (report_.generic_samples < plan_.samples) {
      if (++attempts > attempt_cap()) throw SamplingExhaustedError("qE: too few generic samples");
      std::vector<ComplexPoint> z;
      for (int k = 0; k < n; ++k) z.push_back(grid_.next());
      if (!is_orbit_config(dihedral, z, plan_.tol)) continue;
      const auto y = qE_composite(z, plan_.tol);
      std::vector<QFiber> qf;
      for (const auto& yk : y) qf.push_back(q_fiber(yk, plan_.tol));
      if (std::any_of(qf.begin(), qf.end(), [](const QFiber& f) { return f.branch; })) {
        ++report_.skipped_singular;
        continue;
      }
      ++report_.generic_samples;

      // candidates per coordinate, grouped by unit cell of the real part
      bool sample_found = true;
      std::vector<std::map<long, int>> per_cell(n);
      for (int k = 0; k < n; ++k) {
        std::vector<std::complex<double>> candidates;
        for (const auto& w : qf[k].points) {
          const std::complex<double> z0 = std::log(w.numeric()) / two_pi_i;
          const long lo = static_cast<long>(std::floor(-K - z0.real())) - 1;
          const long hi = static_cast<long>(std::ceil(K - z0.real())) + 1;
          for (long j = lo; j <= hi; ++j) {
            const std::complex<double> c = z0 + static_cast<double>(j);
            double re = c.real();
            if (std::abs(re - std::round(re)) <= eps) re = std::round(re);
            if (re < -K || re >= K) continue;
            candidates.push_back(c);
            ++per_cell[k][static_cast<long>(std::floor(re))];
            if (!near(q_map(exp_cover(ComplexPoint::approx(c))).numeric(), y[k].numeric(), eps)) {
              fail("window candidate does not map to the sampled value");
            }
          }
        }
        for (std::size_t a = 0; a < candidates.size(); ++a) {
          for (std::size_t b = a + 1; b < candidates.size(); ++b) {
            if (near(candidates[a], candidates[b], eps)) fail("coincident window candidates");
          }
        }
        const auto zk = z[k].numeric();
        const bool in_window = zk.real() >= -K && zk.real() < K;
        if (in_window && std::none_of(candidates.begin(), candidates.end(),
                                      [&](const std::complex<double>& c) { return near(c, zk, eps); })) {
          sample_found = false;
        }
      }
      if (!sample_found) fail("sampled point missing from its windowed fiber");

      // fiber size of every cell tuple in [-K, K)^n
      std::vector<long> cell(n, -K);
      while (true) {
        long size = 1;
        for (int k = 0; k < n; ++k) {
          const auto it = per_cell[k].find(cell[k]);
          size *= it == per_cell[k].end() ? 0 : it->second;
        }
        ++report_.fiber_sizes[size];
        int k = 0;
        while (k < n && ++cell[k] == K) cell[k++] = -K;
        if (k == n) break;
      }

      for (int k = 0; k < n; ++k) {
        auto shifted = z;
        shifted[k] = shifted[k] + ComplexPoint(1);
        auto negated = z;
        negated[k] = -negated[k];
        const auto ys = qE_composite(shifted, plan_.tol);
        const auto yn = qE_composite(negated, plan_.tol);
        ++shift.checked;
        ++negate.checked;
        ++period.checked;
        if (!near(ys[k].numeric(), y[k].numeric(), eps)) ++shift.failures;
        if (!near(yn[k].numeric(), y[k].numeric(), eps)) ++negate.failures;
        if (!near(exp_cover(shifted[k]).numeric(), exp_cover(z[k]).numeric(), eps)) ++period.failures;
      }
    }
    report_.deck_checks.push_back(shift);
    report_.deck_checks.push_back(negate);
    report_.deck_checks.push_back(period);
    report_.deck_checks.push_back(q_inversion_check());
  }

  CoverMapId id_;
  CoverPlan plan_;
  GridSampler grid_;
  CoveringReport report_;
};

}  // namespace

CoveringReport verify_cover(const CoverMapId& id, const CoverPlan& plan) {
  if (plan.samples < 1) throw std::invalid_argument("at least one sample is required");
  if (plan.window < 1) throw std::invalid_argument("window must be >= 1");
  return Verifier(id, plan).run();
}

}  // namespace orbconf
