#pragma once

// Seeded generators for property tests. Everything is a pure function of the
// seed so failures replay exactly.

#include <cstdint>
#include <random>
#include <vector>

#include "orbconf/arrangement_spec.hpp"
#include "orbconf/exactfield.hpp"
#include "orbconf/groupoid.hpp"

namespace orbconf::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }
  bool coin() { return rng_() & 1; }

  /// p/q with |p| <= num, 1 <= q <= den.
  Rational rational(long num = 9, long den = 6) { return Rational(integer(-num, num), integer(1, den)); }
  Rational nonzero_rational(long num = 9, long den = 6) {
    for (;;) {
      Rational r = rational(num, den);
      if (!r.is_zero()) return r;
    }
  }
  ComplexPoint gaussian(long num = 9, long den = 6) { return ComplexPoint::exact(rational(num, den), rational(num, den)); }

  Cyclotomic cyclotomic(int m) {
    std::vector<Rational> c(euler_phi(m));
    for (auto& x : c) x = rational(5, 4);
    return Cyclotomic(m, std::move(c));
  }

  /// Hyperplanes with small integer normals and offsets; central when asked.
  ArrangementSpec arrangement(int dim, int count, bool central) {
    std::vector<HyperplaneRow> rows;
    while (static_cast<int>(rows.size()) < count) {
      HyperplaneRow r;
      bool nonzero = false;
      for (int k = 0; k < dim; ++k) {
        const long v = integer(-2, 2);
        nonzero |= v != 0;
        r.normal.emplace_back(v);
      }
      if (!nonzero) continue;
      r.offset = central ? Cyclotomic(0) : Cyclotomic(integer(-2, 2));
      rows.push_back(std::move(r));
    }
    return ArrangementSpec(dim, FieldTag{1}, "random", std::move(rows));
  }

  Permutation permutation(int degree) {
    Permutation p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    for (int i = degree - 1; i > 0; --i) std::swap(p[i], p[integer(0, i)]);
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace orbconf::testing
