#include "orbconf/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace orbconf {

namespace {

template <class Scalar>
Scalar abs_value(const Scalar& s) {
  return s.sign() < 0 ? -s : s;
}

template <class Scalar>
Scalar dot_row(const Matrix<Scalar>& m, Eigen::Index row, const Vector<Scalar>& x) {
  Scalar acc(0);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (!m(row, j).is_zero() && !x(j).is_zero()) acc += m(row, j) * x(j);
  }
  return acc;
}

template <class Scalar>
Matrix<Scalar> stack(const Matrix<Scalar>& top, const RowVector<Scalar>& row) {
  Matrix<Scalar> m(top.rows() + 1, row.size());
  if (top.rows() > 0) m.topRows(top.rows()) = top;
  m.row(top.rows()) = row;
  return m;
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

// ------------------------------------------------------------- FlatPoset

template <class Scalar>
Eigen::Index FlatPoset<Scalar>::rank() const {
  Eigen::Index r = 0;
  for (const auto& f : flats) r = std::max(r, ambient_dim - f.dim);
  return r;
}

template <class Scalar>
std::map<Eigen::Index, int> FlatPoset<Scalar>::count_by_dim() const {
  std::map<Eigen::Index, int> out;
  for (const auto& f : flats) ++out[f.dim];
  return out;
}

template <class Scalar>
FlatPoset<Scalar> flat_poset(const Hyperplanes<Scalar>& h) {
  const Eigen::Index d = h.dim();
  const Eigen::Index k = h.count();
  std::vector<RowVector<Scalar>> aug;
  for (Eigen::Index i = 0; i < k; ++i) aug.push_back(h.augmented(i));

  std::vector<Flat<Scalar>> found;
  std::map<std::vector<int>, int> index;

  Flat<Scalar> ambient;
  ambient.dim = d;
  ambient.equations = Matrix<Scalar>(0, d + 1);
  found.push_back(ambient);
  index[{}] = 0;

  // breadth-first closure under intersection with single hyperplanes
  for (std::size_t at = 0; at < found.size(); ++at) {
    const Flat<Scalar> current = found[at];
    std::vector<bool> covered(k, false);
    for (int i : current.hyperplanes) covered[i] = true;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (covered[i]) continue;
      Echelon<Scalar> e = reduced_row_echelon(stack(current.equations, aug[i]));
      if (!e.pivots.empty() && e.pivots.back() == d) continue;  // empty intersection
      std::vector<int> inside;
      for (Eigen::Index j = 0; j < k; ++j) {
        if (is_zero_vector(reduce_against(e, aug[j]))) {
          inside.push_back(static_cast<int>(j));
          covered[j] = true;
        }
      }
      if (index.contains(inside)) continue;
      Flat<Scalar> f;
      f.dim = d - static_cast<Eigen::Index>(e.pivots.size());
      f.hyperplanes = inside;
      f.equations = std::move(e.rows);
      f.pivots = std::move(e.pivots);
      index.emplace(std::move(inside), static_cast<int>(found.size()));
      found.push_back(std::move(f));
    }
  }

  std::sort(found.begin(), found.end(), [](const Flat<Scalar>& a, const Flat<Scalar>& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.hyperplanes < b.hyperplanes;
  });

  FlatPoset<Scalar> poset;
  poset.ambient_dim = d;
  for (std::size_t x = 0; x < found.size(); ++x) {
    if (x == 0) {
      found[x].mobius = 1;
      continue;
    }
    Integer sum = 0;
    for (std::size_t z = 0; z < x; ++z) {
      if (is_subset(found[z].hyperplanes, found[x].hyperplanes)) {
        sum += found[z].mobius;
        if (found[z].dim == found[x].dim + 1) poset.covers.emplace_back(static_cast<int>(z), static_cast<int>(x));
      }
    }
    found[x].mobius = -sum;
  }
  poset.flats = std::move(found);
  return poset;
}

template <class Scalar>
Vector<Scalar> anchor_point(const Flat<Scalar>& f, Eigen::Index ambient_dim) {
  Vector<Scalar> x = Vector<Scalar>::Constant(ambient_dim, Scalar(0));
  for (std::size_t r = 0; r < f.pivots.size(); ++r) {
    x(f.pivots[r]) = f.equations(static_cast<Eigen::Index>(r), ambient_dim);
  }
  return x;
}

template <class Scalar>
Matrix<Scalar> direction_basis(const Flat<Scalar>& f, Eigen::Index ambient_dim) {
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : f.pivots) is_pivot[p] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Constant(ambient_dim, f.dim, Scalar(0));
  Eigen::Index col = 0;
  for (Eigen::Index free = 0; free < ambient_dim; ++free) {
    if (is_pivot[free]) continue;
    basis(free, col) = 1;
    for (std::size_t r = 0; r < f.pivots.size(); ++r) {
      basis(f.pivots[r], col) = -f.equations(static_cast<Eigen::Index>(r), free);
    }
    ++col;
  }
  return basis;
}

template <class Scalar>
Polynomial characteristic_polynomial(const FlatPoset<Scalar>& p) {
  std::vector<Integer> c(p.ambient_dim + 1, Integer(0));
  for (const auto& f : p.flats) c[f.dim] += f.mobius;
  return Polynomial(std::move(c));
}

template <class Scalar>
Polynomial poincare_polynomial(const FlatPoset<Scalar>& p) {
  const Eigen::Index d = p.ambient_dim;
  std::vector<Integer> c(d + 1, Integer(0));
  for (const auto& f : p.flats) c[d - f.dim] += abs(f.mobius);
  Polynomial pi(std::move(c));

  // (-t)^d chi(-1/t): coefficient of t^c is (-1)^c chi_{d-c}
  const Polynomial chi = characteristic_polynomial(p);
  std::vector<Integer> sub(d + 1, Integer(0));
  for (Eigen::Index k = 0; k <= d; ++k) sub[k] = (k % 2 == 0 ? 1 : -1) * chi.coeff(static_cast<int>(d - k));
  if (Polynomial(std::move(sub)) != pi) {
    throw std::logic_error("Poincare polynomial disagrees with (-t)^d chi(-1/t)");
  }
  return pi;
}

ChamberCount chamber_count(const FlatPoset<Rational>& p) {
  const Polynomial chi = characteristic_polynomial(p);
  const Integer sign_d = p.ambient_dim % 2 == 0 ? 1 : -1;
  const Integer sign_r = p.rank() % 2 == 0 ? 1 : -1;
  return {sign_d * chi.eval(Integer(-1)), sign_r * chi.eval(Integer(1))};
}

ChamberCount chamber_count(const FlatPoset<Cyclotomic>&) {
  throw NotRealError("chamber counts need an arrangement defined over Q");
}

// ---------------------------------------------------------- restriction

template <class Scalar>
Hyperplanes<Scalar> normalize_unique(const Hyperplanes<Scalar>& h) {
  std::vector<RowVector<Scalar>> kept;
  for (Eigen::Index i = 0; i < h.count(); ++i) {
    RowVector<Scalar> r = h.augmented(i);
    Eigen::Index lead = 0;
    while (lead < h.dim() && r(lead).is_zero()) ++lead;
    if (lead == h.dim()) throw std::invalid_argument("normalize_unique: zero normal");
    const Scalar inv = Scalar(1) / r(lead);
    for (Eigen::Index j = 0; j < r.size(); ++j) r(j) *= inv;
    const bool dup = std::any_of(kept.begin(), kept.end(), [&](const RowVector<Scalar>& o) {
      for (Eigen::Index j = 0; j < r.size(); ++j) {
        if (!(o(j) == r(j))) return false;
      }
      return true;
    });
    if (!dup) kept.push_back(std::move(r));
  }
  Hyperplanes<Scalar> out{Matrix<Scalar>(static_cast<Eigen::Index>(kept.size()), h.dim()),
                          Vector<Scalar>(static_cast<Eigen::Index>(kept.size()))};
  for (std::size_t i = 0; i < kept.size(); ++i) {
    out.normals.row(static_cast<Eigen::Index>(i)) = kept[i].head(h.dim());
    out.offsets(static_cast<Eigen::Index>(i)) = kept[i](h.dim());
  }
  return out;
}

template <class Scalar>
Restriction<Scalar> restrict_to(const Hyperplanes<Scalar>& h, Eigen::Index i) {
  const Eigen::Index d = h.dim();
  Eigen::Index p = 0;
  while (p < d && h.normals(i, p).is_zero()) ++p;
  if (p == d) throw std::invalid_argument("restrict_to: zero normal");
  const Scalar lead = h.normals(i, p);

  Restriction<Scalar> out;
  out.origin = Vector<Scalar>::Constant(d, Scalar(0));
  out.origin(p) = h.offsets(i) / lead;
  out.basis = Matrix<Scalar>::Constant(d, d - 1, Scalar(0));
  for (Eigen::Index j = 0, col = 0; j < d; ++j) {
    if (j == p) continue;
    out.basis(j, col) = 1;
    out.basis(p, col) = -h.normals(i, j) / lead;
    ++col;
  }

  std::vector<RowVector<Scalar>> rows;
  for (Eigen::Index g = 0; g < h.count(); ++g) {
    if (g == i) continue;
    RowVector<Scalar> r(d);
    bool zero = true;
    for (Eigen::Index c = 0; c < d - 1; ++c) {
      Scalar acc(0);
      for (Eigen::Index j = 0; j < d; ++j) {
        if (!h.normals(g, j).is_zero() && !out.basis(j, c).is_zero()) acc += h.normals(g, j) * out.basis(j, c);
      }
      zero = zero && acc.is_zero();
      r(c) = acc;
    }
    if (zero) continue;  // parallel to, or containing, hyperplane i
    r(d - 1) = h.offsets(g) - dot_row(h.normals, g, out.origin);
    rows.push_back(std::move(r));
  }
  Hyperplanes<Scalar> raw{Matrix<Scalar>(static_cast<Eigen::Index>(rows.size()), d - 1),
                          Vector<Scalar>(static_cast<Eigen::Index>(rows.size()))};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    raw.normals.row(static_cast<Eigen::Index>(r)) = rows[r].head(d - 1);
    raw.offsets(static_cast<Eigen::Index>(r)) = rows[r](d - 1);
  }
  out.hyperplanes = normalize_unique(raw);
  return out;
}

// ------------------------------------------------------ spec-level API

Polynomial ArrangementPoset::characteristic() const {
  return rational ? characteristic_polynomial(*rational) : characteristic_polynomial(*cyclotomic);
}

Polynomial ArrangementPoset::poincare() const {
  return rational ? poincare_polynomial(*rational) : poincare_polynomial(*cyclotomic);
}

std::map<Eigen::Index, int> ArrangementPoset::count_by_dim() const {
  return rational ? rational->count_by_dim() : cyclotomic->count_by_dim();
}

Eigen::Index ArrangementPoset::rank() const { return rational ? rational->rank() : cyclotomic->rank(); }

std::size_t ArrangementPoset::size() const { return rational ? rational->flats.size() : cyclotomic->flats.size(); }

ArrangementPoset flat_poset(const ArrangementSpec& a) {
  ArrangementPoset p;
  if (auto r = a.rational()) {
    p.rational = flat_poset(*r);
  } else {
    p.cyclotomic = flat_poset(a.hyperplanes());
  }
  return p;
}

ChamberCount chamber_count(const ArrangementPoset& p) {
  if (!p.rational) throw NotRealError("chamber counts need an arrangement defined over Q");
  return chamber_count(*p.rational);
}

ArrangementSpec restriction(const ArrangementSpec& a, Eigen::Index i) {
  if (a.dim() == 0) throw std::invalid_argument("restriction in dimension 0");
  const std::string label = a.label() + "|H" + std::to_string(i);
  auto to_rows = [](const auto& hp) {
    std::vector<HyperplaneRow> rows;
    for (Eigen::Index r = 0; r < hp.count(); ++r) {
      HyperplaneRow row;
      for (Eigen::Index j = 0; j < hp.dim(); ++j) row.normal.emplace_back(hp.normals(r, j));
      row.offset = Cyclotomic(hp.offsets(r));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  if (auto r = a.rational()) {
    return ArrangementSpec(a.dim() - 1, a.field(), label, to_rows(restrict_to(*r, i).hyperplanes));
  }
  return ArrangementSpec(a.dim() - 1, a.field(), label, to_rows(restrict_to(a.hyperplanes(), i).hyperplanes));
}

// ----------------------------------------------------------- chambers

namespace {

using SignKey = std::vector<int8_t>;

SignKey signs_at(const Hyperplanes<Rational>& h, Eigen::Index upto, const Vector<Rational>& x) {
  SignKey key(static_cast<std::size_t>(upto));
  for (Eigen::Index i = 0; i < upto; ++i) {
    const int s = (dot_row(h.normals, i, x) - h.offsets(i)).sign();
    if (s == 0) throw std::logic_error("chamber witness lies on a hyperplane");
    key[static_cast<std::size_t>(i)] = static_cast<int8_t>(s);
  }
  return key;
}

// One exact witness per chamber. Inserting hyperplane i splits exactly the
// chambers met by it; those correspond to the chambers of the restriction of
// the first i hyperplanes to hyperplane i.
std::vector<Vector<Rational>> chamber_witnesses(const Hyperplanes<Rational>& h) {
  const Eigen::Index d = h.dim();
  std::vector<Vector<Rational>> witnesses{Vector<Rational>::Constant(d, Rational(0))};
  if (d == 0) return witnesses;

  for (Eigen::Index i = 0; i < h.count(); ++i) {
    const Hyperplanes<Rational> upto{h.normals.topRows(i + 1), h.offsets.head(i + 1)};
    const Restriction<Rational> res = restrict_to(upto, i);

    std::map<SignKey, std::size_t> by_key;
    for (std::size_t w = 0; w < witnesses.size(); ++w) by_key.emplace(signs_at(h, i, witnesses[w]), w);

    const Vector<Rational> normal = h.normals.row(i).transpose();
    std::vector<std::optional<Vector<Rational>>> split(witnesses.size());
    for (const auto& y : chamber_witnesses(res.hyperplanes)) {
      Vector<Rational> p = res.origin;
      for (Eigen::Index c = 0; c < y.size(); ++c) {
        if (!y(c).is_zero()) p += y(c) * res.basis.col(c);
      }
      split.at(by_key.at(signs_at(h, i, p))) = std::move(p);
    }

    std::vector<Vector<Rational>> next;
    next.reserve(witnesses.size() * 2);
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
      if (!split[w]) {
        next.push_back(std::move(witnesses[w]));
        continue;
      }
      const Vector<Rational>& p = *split[w];
      // step along the normal, staying clear of every earlier hyperplane
      std::optional<Rational> limit;
      for (Eigen::Index g = 0; g < i; ++g) {
        const Rational slope = dot_row(h.normals, g, normal);
        if (slope.is_zero()) continue;
        const Rational room = abs_value(Rational(dot_row(h.normals, g, p) - h.offsets(g))) / abs_value(slope);
        if (!limit || room < *limit) limit = room;
      }
      const Rational step = limit ? *limit / 2 : Rational(1);
      next.push_back(p + step * normal);
      next.push_back(p - step * normal);
    }
    witnesses = std::move(next);
  }
  return witnesses;
}

}  // namespace

ChamberSet enumerate_chambers(const Hyperplanes<Rational>& h) {
  ChamberSet out;
  for (auto& w : chamber_witnesses(h)) {
    Chamber c;
    c.signs = signs_at(h, h.count(), w);
    c.witness = std::move(w);
    out.chambers.push_back(std::move(c));
  }
  std::sort(out.chambers.begin(), out.chambers.end(),
            [](const Chamber& a, const Chamber& b) { return a.signs < b.signs; });
  const auto dup = std::adjacent_find(out.chambers.begin(), out.chambers.end(),
                                      [](const Chamber& a, const Chamber& b) { return a.signs == b.signs; });
  if (dup != out.chambers.end()) throw std::logic_error("duplicate chamber sign vector");
  return out;
}

ChamberSet enumerate_chambers(const ArrangementSpec& a, ChamberLimits limits) {
  const auto h = a.rational_or_throw();
  if (a.dim() > limits.max_dim || a.size() > limits.max_hyperplanes) {
    throw SizeError("chamber enumeration limited to dim <= " + std::to_string(limits.max_dim) + " and <= " +
                    std::to_string(limits.max_hyperplanes) + " hyperplanes; got dim " + std::to_string(a.dim()) +
                    " with " + std::to_string(a.size()));
  }
  return enumerate_chambers(h);
}

SimplicialCertificate is_simplicial(const ArrangementSpec& a, ChamberLimits limits) {
  if (!a.is_central()) throw CentralityError("simpliciality is defined for central arrangements only");
  const auto h = a.rational_or_throw();

  // essentialization: coordinates along the pivot columns of the row space
  const Echelon<Rational> span = reduced_row_echelon(h.normals);
  const auto r = static_cast<Eigen::Index>(span.pivots.size());
  Hyperplanes<Rational> ess{Matrix<Rational>(h.count(), r), Vector<Rational>::Constant(h.count(), Rational(0))};
  for (Eigen::Index i = 0; i < h.count(); ++i) {
    for (Eigen::Index c = 0; c < r; ++c) ess.normals(i, c) = h.normals(i, span.pivots[c]);
  }
  if (r > limits.max_dim || h.count() > limits.max_hyperplanes) {
    throw SizeError("simpliciality test limited to rank <= " + std::to_string(limits.max_dim) + " and <= " +
                    std::to_string(limits.max_hyperplanes) + " hyperplanes");
  }

  const ChamberSet chambers = enumerate_chambers(ess);
  std::set<SignKey> present;
  for (const auto& c : chambers.chambers) present.insert(c.signs);

  SimplicialCertificate cert;
  cert.rank = r;
  cert.chambers = chambers.size();
  cert.simplicial = true;
  cert.definition =
      "central arrangement, essentialized; simplicial iff every chamber has exactly rank walls with linearly "
      "independent normals (a wall is a hyperplane whose single sign flip gives another chamber)";
  for (const auto& c : chambers.chambers) {
    std::vector<Eigen::Index> walls;
    for (std::size_t i = 0; i < c.signs.size(); ++i) {
      SignKey flipped = c.signs;
      flipped[i] = static_cast<int8_t>(-flipped[i]);
      if (present.contains(flipped)) walls.push_back(static_cast<Eigen::Index>(i));
    }
    Matrix<Rational> wall_normals(static_cast<Eigen::Index>(walls.size()), r);
    for (std::size_t w = 0; w < walls.size(); ++w) wall_normals.row(static_cast<Eigen::Index>(w)) = ess.normals.row(walls[w]);
    const bool ok = static_cast<Eigen::Index>(walls.size()) == r && rank(wall_normals) == r;
    cert.simplicial = cert.simplicial && ok;
    cert.wall_counts.push_back(static_cast<int>(walls.size()));
  }
  return cert;
}

// -------------------------------------------------------- finite fields

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::vector<Integer>> integer_rows(const ArrangementSpec& a) {
  const auto h = a.rational_or_throw();
  std::vector<std::vector<Integer>> out;
  for (Eigen::Index i = 0; i < h.count(); ++i) {
    Integer l = 1;
    const RowVector<Rational> row = h.augmented(i);
    for (Eigen::Index j = 0; j < row.size(); ++j) l = lcm(l, row(j).denominator());
    std::vector<Integer> ints;
    Integer g = 0;
    for (Eigen::Index j = 0; j < row.size(); ++j) {
      const Rational scaled = row(j) * Rational(l);
      ints.push_back(scaled.numerator());
      g = gcd(g, ints.back());
    }
    for (auto& v : ints) v /= g;
    out.push_back(std::move(ints));
  }
  return out;
}

namespace {

void add_prime_factors(Integer n, std::set<long>& out) {
  n = abs(n);
  for (long p = 2; Integer(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    out.insert(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) {
    if (!n.fits_slong_p()) throw std::overflow_error("prime factor exceeds long");
    out.insert(n.get_si());
  }
}

template <class F>
void for_each_subset(int n, int max_size, F&& f) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (!pick.empty()) f(pick);
    if (static_cast<int>(pick.size()) == max_size) return;
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

// gcd of all maximal minors of the |rows| x cols integer submatrix
Integer minor_gcd(const std::vector<std::vector<Integer>>& m, const std::vector<int>& rows, int cols) {
  const int t = static_cast<int>(rows.size());
  if (t > cols) return 0;
  Integer g = 0;
  for_each_subset(cols, t, [&](const std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) != t) return;
    Matrix<Rational> sub(t, t);
    for (int r = 0; r < t; ++r) {
      for (int c = 0; c < t; ++c) sub(r, c) = Rational(m[rows[r]][pick[c]]);
    }
    g = gcd(g, determinant(sub).numerator());
  });
  return g;
}

}  // namespace

std::set<long> bad_primes(const ArrangementSpec& a) {
  const auto rows = integer_rows(a);
  const int d = a.dim();
  std::set<long> bad;
  for_each_subset(static_cast<int>(rows.size()), d + 1, [&](const std::vector<int>& pick) {
    // independence of normals, and inconsistency of augmented systems,
    // must both survive reduction mod p
    if (const Integer g = minor_gcd(rows, pick, d); g != 0) add_prime_factors(g, bad);
    if (const Integer g = minor_gcd(rows, pick, d + 1); g != 0) add_prime_factors(g, bad);
  });
  return bad;
}

namespace {
long max_coefficient(const std::vector<std::vector<Integer>>& rows) {
  Integer mx = 0;
  for (const auto& r : rows) {
    for (const auto& v : r) mx = std::max(mx, Integer(abs(v)));
  }
  if (!mx.fits_slong_p()) throw std::overflow_error("coefficient exceeds long");
  return mx.get_si();
}
}  // namespace

std::vector<long> good_primes(const ArrangementSpec& a, int count) {
  const auto rows = integer_rows(a);
  const auto bad = bad_primes(a);
  std::vector<long> out;
  for (long q = max_coefficient(rows) + 1; static_cast<int>(out.size()) < count; ++q) {
    if (is_prime(q) && !bad.contains(q)) out.push_back(q);
  }
  return out;
}

Integer finite_field_count(const ArrangementSpec& a, long q) {
  const auto rows = integer_rows(a);
  if (!is_prime(q)) throw BadPrimeError(std::to_string(q) + " is not prime");
  if (q <= max_coefficient(rows)) throw BadPrimeError("q = " + std::to_string(q) + " does not exceed the coefficients");
  if (bad_primes(a).contains(q)) throw BadPrimeError("q = " + std::to_string(q) + " is a bad prime for this arrangement");

  const int d = a.dim();
  double total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<double>(q);
  if (total > 5e7) throw SizeError("F_q^d has too many points to enumerate");

  std::vector<std::vector<long>> mod;
  for (const auto& r : rows) {
    std::vector<long> m;
    for (const auto& v : r) {
      Integer x = v % q;
      if (x < 0) x += q;
      m.push_back(x.get_si());
    }
    mod.push_back(std::move(m));
  }

  std::vector<long> x(d, 0);
  Integer count = 0;
  while (true) {
    bool off = true;
    for (const auto& r : mod) {
      long acc = (q - r[d]) % q;
      for (int j = 0; j < d; ++j) acc = (acc + r[j] * x[j]) % q;
      if (acc == 0) {
        off = false;
        break;
      }
    }
    if (off) ++count;
    int j = 0;
    while (j < d && ++x[j] == q) x[j++] = 0;
    if (j == d) break;
  }
  return count;
}

// ------------------------------------------------------ instantiations

#define ORBCONF_INSTANTIATE(S)                                                          \
  template struct FlatPoset<S>;                                                          \
  template FlatPoset<S> flat_poset<S>(const Hyperplanes<S>&);                            \
  template Vector<S> anchor_point<S>(const Flat<S>&, Eigen::Index);                      \
  template Matrix<S> direction_basis<S>(const Flat<S>&, Eigen::Index);                   \
  template Polynomial characteristic_polynomial<S>(const FlatPoset<S>&);                 \
  template Polynomial poincare_polynomial<S>(const FlatPoset<S>&);                       \
  template Restriction<S> restrict_to<S>(const Hyperplanes<S>&, Eigen::Index);           \
  template Hyperplanes<S> normalize_unique<S>(const Hyperplanes<S>&);

ORBCONF_INSTANTIATE(Rational)
ORBCONF_INSTANTIATE(Cyclotomic)

#undef ORBCONF_INSTANTIATE

}  // namespace orbconf
