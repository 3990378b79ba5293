#include "orbconf/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "orbconf/errors.hpp"

namespace orbconf {

// ------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidModelError("a group needs at least one element");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InvalidModelError("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvalidModelError("multiplication table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a) throw InvalidModelError("element 0 is not the identity");
  }
  FiniteGroup g;
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) g.inverse_[a] = b;
    }
    if (g.inverse_[a] < 0) throw InvalidModelError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InvalidModelError("multiplication is not associative at (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  g.table_ = std::move(table);
  return g;
}

namespace {
void check_permutation(const Permutation& p, int degree) {
  if (static_cast<int>(p.size()) != degree) throw ActionError("permutation has the wrong length");
  std::vector<bool> seen(degree, false);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) throw ActionError("not a permutation of 0.." + std::to_string(degree - 1));
    seen[v] = true;
  }
}

Permutation compose_perm(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}
}  // namespace

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& gens, int degree) {
  if (degree < 0) throw ActionError("negative degree");
  for (const auto& p : gens) check_permutation(p, degree);
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> found{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Permutation q = compose_perm(s, p);
      if (found.insert(q).second) queue.push_back(std::move(q));
    }
  }
  std::vector<Permutation> elems(found.begin(), found.end());  // identity sorts first
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose_perm(elems[a], elems[b]));
  }
  FiniteGroup g = from_table(std::move(table));
  g.perms_ = std::move(elems);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidModelError("cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw InvalidModelError("dihedral group needs n >= 1");
  // r^k s^e has index k + n e; s r = r^-1 s
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int a = x % n, e = x / n, b = y % n, f = y / n;
      const int k = ((e == 0 ? a + b : a - b) % n + n) % n;
      t[x][y] = k + n * ((e + f) % 2);
    }
  }
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return from_table(std::move(t));
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::vector<bool> in(order(), false);
  in[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g : gens) {
      if (g < 0 || g >= order()) throw InvalidModelError("generator out of range");
      const int y = mul(g, x);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < order(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& sub) const {
  if (sub.empty() || !std::is_sorted(sub.begin(), sub.end())) return false;
  if (sub.front() < 0 || sub.back() >= order()) return false;
  return generated(sub) == sub;
}

bool FiniteGroup::is_normal(const std::vector<int>& sub) const {
  if (!is_subgroup(sub)) return false;
  std::vector<bool> in(order(), false);
  for (int s : sub) in[s] = true;
  for (int g = 0; g < order(); ++g) {
    for (int s : sub) {
      if (!in[mul(mul(g, s), inv(g))]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  std::set<std::vector<int>> found{{0}};
  std::deque<std::vector<int>> queue{{0}};
  while (!queue.empty()) {
    const auto h = queue.front();
    queue.pop_front();
    std::vector<bool> in(order(), false);
    for (int x : h) in[x] = true;
    for (int g = 0; g < order(); ++g) {
      if (in[g]) continue;
      auto gens = h;
      gens.push_back(g);
      auto k = generated(gens);
      if (found.insert(k).second) queue.push_back(std::move(k));
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::vector<int>> FiniteGroup::normal_subgroups() const {
  std::vector<std::vector<int>> out;
  for (auto& h : subgroups()) {
    if (is_normal(h)) out.push_back(std::move(h));
  }
  return out;
}

// ------------------------------------------------------------- GroupAction

GroupAction::GroupAction(FiniteGroup group, std::vector<std::vector<int>> act)
    : group_(std::move(group)), act_(std::move(act)) {
  if (static_cast<int>(act_.size()) != group_.order()) throw ActionError("action table needs one row per element");
  points_ = static_cast<int>(act_[0].size());
  for (const auto& row : act_) check_permutation(row, points_);
  for (int x = 0; x < points_; ++x) {
    if (act_[0][x] != x) throw ActionError("the identity does not act trivially");
  }
  for (int g = 0; g < group_.order(); ++g) {
    for (int h = 0; h < group_.order(); ++h) {
      for (int x = 0; x < points_; ++x) {
        if (act_[group_.mul(g, h)][x] != act_[g][act_[h][x]]) {
          throw ActionError("(gh).x != g.(h.x) for g = " + std::to_string(g) + ", h = " + std::to_string(h) +
                            ", x = " + std::to_string(x));
        }
      }
    }
  }
}

GroupAction GroupAction::regular(const FiniteGroup& g) { return GroupAction(g, g.table()); }

GroupAction GroupAction::trivial(const FiniteGroup& g, int points) {
  std::vector<int> id(points);
  std::iota(id.begin(), id.end(), 0);
  return GroupAction(g, std::vector<std::vector<int>>(g.order(), id));
}

GroupAction GroupAction::from_permutations(const std::vector<Permutation>& gens, int points) {
  FiniteGroup g = FiniteGroup::from_permutations(gens, points);
  auto act = g.permutations();
  return GroupAction(std::move(g), std::move(act));
}

GroupAction GroupAction::disjoint_union(const GroupAction& a, const GroupAction& b) {
  if (a.group().table() != b.group().table()) throw ActionError("disjoint union needs the same group");
  std::vector<std::vector<int>> act(a.group().order());
  for (int g = 0; g < a.group().order(); ++g) {
    act[g] = a.act_[g];
    for (int x : b.act_[g]) act[g].push_back(x + a.points());
  }
  return GroupAction(a.group(), std::move(act));
}

GroupAction GroupAction::cosets(const FiniteGroup& g, const std::vector<int>& k) {
  if (!g.is_subgroup(k)) throw InvalidModelError("coset action needs a subgroup");
  std::vector<int> label(g.order(), -1);
  std::vector<int> rep;
  for (int x = 0; x < g.order(); ++x) {
    if (label[x] >= 0) continue;
    for (int y : k) label[g.mul(x, y)] = static_cast<int>(rep.size());
    rep.push_back(x);
  }
  std::vector<std::vector<int>> act(g.order(), std::vector<int>(rep.size()));
  for (int h = 0; h < g.order(); ++h) {
    for (std::size_t c = 0; c < rep.size(); ++c) act[h][c] = label[g.mul(h, rep[c])];
  }
  return GroupAction(g, std::move(act));
}

GroupAction GroupAction::restrict_to(const std::vector<int>& sub) const {
  if (!group_.is_subgroup(sub)) throw InvalidModelError("not a subgroup");
  std::map<int, int> index;
  for (std::size_t i = 0; i < sub.size(); ++i) index[sub[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(sub.size(), std::vector<int>(sub.size()));
  std::vector<std::vector<int>> act;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = 0; j < sub.size(); ++j) table[i][j] = index.at(group_.mul(sub[i], sub[j]));
    act.push_back(act_[sub[i]]);
  }
  return GroupAction(FiniteGroup::from_table(std::move(table)), std::move(act));
}

std::vector<int> GroupAction::orbit_labels() const {
  std::vector<int> label(points_, -1);
  int next = 0;
  for (int x = 0; x < points_; ++x) {
    if (label[x] >= 0) continue;
    for (int g = 0; g < group_.order(); ++g) label[act_[g][x]] = next;
    ++next;
  }
  return label;
}

std::vector<int> GroupAction::stabilizer(int x) const {
  std::vector<int> out;
  for (int g = 0; g < group_.order(); ++g) {
    if (act_[g][x] == x) out.push_back(g);
  }
  return out;
}

// ----------------------------------------------------------- FiniteGroupoid

void FiniteGroupoid::index() {
  const int m = morphisms();
  out_.assign(objects_, {});
  pos_.assign(m, -1);
  for (int f = 0; f < m; ++f) {
    pos_[f] = static_cast<int>(out_[source_[f]].size());
    out_[source_[f]].push_back(f);
  }
  comp_.assign(m, {});
  for (int f = 0; f < m; ++f) comp_[f].assign(out_[target_[f]].size(), -1);
}

FiniteGroupoid FiniteGroupoid::from_triples(int objects, std::vector<int> source, std::vector<int> target,
                                            std::vector<int> identity, std::vector<int> inverse,
                                            const std::vector<std::array<int, 3>>& triples) {
  const int m = static_cast<int>(source.size());
  auto in_range = [](int v, int n) { return v >= 0 && v < n; };
  if (objects < 0) throw ParseError("negative object count");
  if (static_cast<int>(target.size()) != m || static_cast<int>(inverse.size()) != m ||
      static_cast<int>(identity.size()) != objects) {
    throw ParseError("source, target, inverse and identity lists have inconsistent lengths");
  }
  for (int f = 0; f < m; ++f) {
    if (!in_range(source[f], objects) || !in_range(target[f], objects) || !in_range(inverse[f], m)) {
      throw ParseError("morphism " + std::to_string(f) + " has an out-of-range field");
    }
  }
  for (int x = 0; x < objects; ++x) {
    if (!in_range(identity[x], m)) throw ParseError("identity of object " + std::to_string(x) + " out of range");
  }
  FiniteGroupoid g;
  g.objects_ = objects;
  g.source_ = std::move(source);
  g.target_ = std::move(target);
  g.identity_ = std::move(identity);
  g.inverse_ = std::move(inverse);
  g.index();
  for (const auto& [a, b, c] : triples) {
    if (!in_range(a, m) || !in_range(b, m) || !in_range(c, m)) throw ParseError("composition triple out of range");
    if (g.source_[a] != g.target_[b]) {
      throw ParseError("composition triple (" + std::to_string(a) + ", " + std::to_string(b) + ") is not composable");
    }
    g.comp_[b][g.pos_[a]] = c;
  }
  for (int f = 0; f < m; ++f) {
    for (std::size_t k = 0; k < g.comp_[f].size(); ++k) {
      if (g.comp_[f][k] < 0) {
        throw ParseError("no composite given for (" + std::to_string(g.out_[g.target_[f]][k]) + ", " +
                         std::to_string(f) + ")");
      }
    }
  }
  return g;
}

int FiniteGroupoid::compose(int g, int f) const {
  if (source_.at(g) != target_.at(f)) throw std::invalid_argument("morphisms are not composable");
  return comp_[f][pos_[g]];
}

void FiniteGroupoid::set_composition(int g, int f, int h) {
  if (source_.at(g) != target_.at(f)) throw std::invalid_argument("morphisms are not composable");
  comp_[f][pos_[g]] = h;
}

std::vector<std::array<int, 3>> FiniteGroupoid::triples() const {
  std::vector<std::array<int, 3>> out;
  for (int f = 0; f < morphisms(); ++f) {
    for (int g : out_[target_[f]]) out.push_back({g, f, compose(g, f)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroupoid FiniteGroupoid::unit(int objects) {
  std::vector<int> ids(objects);
  std::iota(ids.begin(), ids.end(), 0);
  return build(objects, ids, ids, ids, ids, [](int g, int) { return g; });
}

// ------------------------------------------------------------------ checks

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string CheckReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name + ": " + c.detail;
  }
  return {};
}

namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

class CheckList {
 public:
  explicit CheckList(CheckReport& r) : report_(r) {}
  Check& add(std::string name) {
    report_.checks.push_back({std::move(name), true, {}});
    return report_.checks.back();
  }
  static void fail(Check& c, std::string detail) {
    if (!c.passed) return;  // keep the first violation
    c.passed = false;
    c.detail = std::move(detail);
  }

 private:
  CheckReport& report_;
};

}  // namespace

CheckReport check_axioms(const FiniteGroupoid& g) {
  CheckReport report;
  CheckList list(report);
  const int m = g.morphisms();
  const int n = g.objects();

  Check& ranges = list.add("ranges");
  for (int f = 0; f < m; ++f) {
    for (int h : g.out(g.target(f))) {
      const int c = g.compose(h, f);
      if (c < 0 || c >= m) CheckList::fail(ranges, "composite of " + triple_str(h, f, c) + " out of range");
    }
  }
  if (!ranges.passed) return report;

  Check& ids = list.add("identities");
  for (int x = 0; x < n; ++x) {
    const int e = g.identity(x);
    if (g.source(e) != x || g.target(e) != x) CheckList::fail(ids, "identity of object " + std::to_string(x) + " is not a loop at it");
  }

  Check& ends = list.add("source and target of composites");
  for (int f = 0; f < m; ++f) {
    for (int h : g.out(g.target(f))) {
      const int c = g.compose(h, f);
      if (g.source(c) != g.source(f) || g.target(c) != g.target(h)) {
        CheckList::fail(ends, "composite " + triple_str(h, f, c) + " has wrong endpoints");
      }
    }
  }

  Check& units = list.add("unit laws");
  if (ids.passed) {
    for (int f = 0; f < m; ++f) {
      if (g.compose(g.identity(g.target(f)), f) != f || g.compose(f, g.identity(g.source(f))) != f) {
        CheckList::fail(units, "identity does not act as a unit on morphism " + std::to_string(f));
      }
    }
  } else {
    CheckList::fail(units, "skipped: identities are malformed");
  }

  Check& assoc = list.add("associativity");
  if (ends.passed) {
    for (int f = 0; f < m && assoc.passed; ++f) {
      for (int gg : g.out(g.target(f))) {
        const int gf = g.compose(gg, f);
        for (int h : g.out(g.target(gg))) {
          if (g.compose(g.compose(h, gg), f) != g.compose(h, gf)) {
            CheckList::fail(assoc, "(h o g) o f != h o (g o f) for (h, g, f) = " + triple_str(h, gg, f));
          }
        }
      }
    }
  } else {
    CheckList::fail(assoc, "skipped: composite endpoints are wrong");
  }

  Check& inv = list.add("inverses");
  for (int f = 0; f < m; ++f) {
    const int i = g.inverse(f);
    if (g.source(i) != g.target(f) || g.target(i) != g.source(f)) {
      CheckList::fail(inv, "inverse of " + std::to_string(f) + " has wrong endpoints");
      continue;
    }
    if (g.compose(f, i) != g.identity(g.target(f)) || g.compose(i, f) != g.identity(g.source(f))) {
      CheckList::fail(inv, "morphism " + std::to_string(i) + " is not inverse to " + std::to_string(f));
    }
  }
  return report;
}

// ------------------------------------------------------------ constructions

FiniteGroupoid translation_groupoid(const GroupAction& a) {
  const int n = a.points();
  const int h = a.group().order();
  const FiniteGroup& grp = a.group();
  std::vector<int> s(n * h), t(n * h), inv(n * h), id(n);
  for (int x = 0; x < n; ++x) {
    id[x] = x * h;
    for (int g = 0; g < h; ++g) {
      s[x * h + g] = x;
      t[x * h + g] = a.apply(g, x);
      inv[x * h + g] = a.apply(g, x) * h + grp.inv(g);
    }
  }
  return FiniteGroupoid::build(n, std::move(s), std::move(t), std::move(id), std::move(inv),
                               [&](int second, int first) {
                                 return (first / h) * h + grp.mul(second % h, first % h);
                               });
}

OrbitSpace orbit_space(const FiniteGroupoid& g) {
  std::vector<int> parent(g.objects());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < g.morphisms(); ++f) {
    const int a = find(g.source(f)), b = find(g.target(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  OrbitSpace o;
  o.quotient.assign(g.objects(), -1);
  std::map<int, int> block;
  for (int x = 0; x < g.objects(); ++x) {
    const int r = find(x);
    auto [it, inserted] = block.emplace(r, static_cast<int>(o.orbits.size()));
    if (inserted) o.orbits.emplace_back();
    o.orbits[it->second].push_back(x);
    o.quotient[x] = it->second;
  }
  return o;
}

ConfigGroupoid configuration_groupoid(const FiniteGroupoid& g, int n) {
  if (n < 1) throw ArityError("configuration groupoid needs n >= 1");
  const OrbitSpace orbits = orbit_space(g);
  ConfigGroupoid c;
  c.n = n;
  if (static_cast<int>(orbits.orbits.size()) < n) {
    c.empty_warning = true;
    c.groupoid = FiniteGroupoid::unit(0);
    return c;
  }

  std::vector<int> tuple;
  std::vector<bool> used(orbits.orbits.size(), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(tuple.size()) == n) {
      c.object_tuples.push_back(tuple);
      return;
    }
    for (int x = 0; x < g.objects(); ++x) {
      if (used[orbits.quotient[x]]) continue;
      used[orbits.quotient[x]] = true;
      tuple.push_back(x);
      self(self);
      tuple.pop_back();
      used[orbits.quotient[x]] = false;
    }
  };
  rec(rec);

  std::map<std::vector<int>, int> object_index;
  for (std::size_t i = 0; i < c.object_tuples.size(); ++i) object_index[c.object_tuples[i]] = static_cast<int>(i);

  for (const auto& obj : c.object_tuples) {
    std::vector<std::vector<int>> partial{{}};
    for (int x : obj) {
      std::vector<std::vector<int>> next;
      for (const auto& p : partial) {
        for (int f : g.out(x)) {
          auto q = p;
          q.push_back(f);
          next.push_back(std::move(q));
        }
      }
      partial = std::move(next);
    }
    for (auto& p : partial) c.morphism_tuples.push_back(std::move(p));
  }
  std::map<std::vector<int>, int> morphism_index;
  for (std::size_t i = 0; i < c.morphism_tuples.size(); ++i) {
    morphism_index[c.morphism_tuples[i]] = static_cast<int>(i);
  }

  const auto apply = [&](const std::vector<int>& tup, auto fn) {
    std::vector<int> out;
    for (int v : tup) out.push_back(fn(v));
    return out;
  };
  const int mc = static_cast<int>(c.morphism_tuples.size());
  std::vector<int> s(mc), t(mc), inv(mc), id;
  for (int i = 0; i < mc; ++i) {
    const auto& tup = c.morphism_tuples[i];
    s[i] = object_index.at(apply(tup, [&](int f) { return g.source(f); }));
    t[i] = object_index.at(apply(tup, [&](int f) { return g.target(f); }));
    inv[i] = morphism_index.at(apply(tup, [&](int f) { return g.inverse(f); }));
  }
  for (const auto& obj : c.object_tuples) id.push_back(morphism_index.at(apply(obj, [&](int x) { return g.identity(x); })));
  c.groupoid = FiniteGroupoid::build(static_cast<int>(c.object_tuples.size()), std::move(s), std::move(t),
                                     std::move(id), std::move(inv), [&](int second, int first) {
                                       std::vector<int> out;
                                       for (int k = 0; k < n; ++k) {
                                         out.push_back(g.compose(c.morphism_tuples[second][k],
                                                                 c.morphism_tuples[first][k]));
                                       }
                                       return morphism_index.at(out);
                                     });
  return c;
}

CheckReport check_homomorphism(const GroupoidHom& f) {
  CheckReport report;
  CheckList list(report);
  const auto& H = f.source;
  const auto& G = f.target;

  Check& shape = list.add("map ranges");
  if (static_cast<int>(f.f0.size()) != H.objects() || static_cast<int>(f.f1.size()) != H.morphisms()) {
    CheckList::fail(shape, "object or morphism map has the wrong length");
  }
  for (int v : f.f0) {
    if (v < 0 || v >= G.objects()) CheckList::fail(shape, "object map value out of range");
  }
  for (int v : f.f1) {
    if (v < 0 || v >= G.morphisms()) CheckList::fail(shape, "morphism map value out of range");
  }
  if (!shape.passed) return report;

  Check& ends = list.add("commutes with source and target");
  for (int m = 0; m < H.morphisms(); ++m) {
    if (G.source(f.f1[m]) != f.f0[H.source(m)] || G.target(f.f1[m]) != f.f0[H.target(m)]) {
      CheckList::fail(ends, "morphism " + std::to_string(m));
    }
  }
  Check& ids = list.add("preserves identities");
  for (int x = 0; x < H.objects(); ++x) {
    if (f.f1[H.identity(x)] != G.identity(f.f0[x])) CheckList::fail(ids, "object " + std::to_string(x));
  }
  Check& comp = list.add("preserves composition");
  if (ends.passed) {
    for (int a = 0; a < H.morphisms() && comp.passed; ++a) {
      for (int b : H.out(H.target(a))) {
        if (f.f1[H.compose(b, a)] != G.compose(f.f1[b], f.f1[a])) {
          CheckList::fail(comp, "pair (" + std::to_string(b) + ", " + std::to_string(a) + ")");
        }
      }
    }
  } else {
    CheckList::fail(comp, "skipped: source/target not preserved");
  }
  Check& inv = list.add("preserves inverses");
  for (int m = 0; m < H.morphisms(); ++m) {
    if (f.f1[H.inverse(m)] != G.inverse(f.f1[m])) CheckList::fail(inv, "morphism " + std::to_string(m));
  }
  return report;
}

GroupoidHom identity_hom(const FiniteGroupoid& g) {
  std::vector<int> f0(g.objects()), f1(g.morphisms());
  std::iota(f0.begin(), f0.end(), 0);
  std::iota(f1.begin(), f1.end(), 0);
  return {g, g, std::move(f0), std::move(f1)};
}

ForgetMap forget_map(const FiniteGroupoid& g, int n) {
  if (n < 2) throw ArityError("forget map needs n >= 2");
  ForgetMap fm{configuration_groupoid(g, n), configuration_groupoid(g, n - 1), {}};
  std::map<std::vector<int>, int> lower_obj, lower_mor;
  for (std::size_t i = 0; i < fm.lower.object_tuples.size(); ++i) lower_obj[fm.lower.object_tuples[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < fm.lower.morphism_tuples.size(); ++i) lower_mor[fm.lower.morphism_tuples[i]] = static_cast<int>(i);
  auto drop = [](std::vector<int> v) {
    v.pop_back();
    return v;
  };
  for (const auto& o : fm.upper.object_tuples) fm.hom.f0.push_back(lower_obj.at(drop(o)));
  for (const auto& m : fm.upper.morphism_tuples) fm.hom.f1.push_back(lower_mor.at(drop(m)));
  fm.hom.source = fm.upper.groupoid;
  fm.hom.target = fm.lower.groupoid;
  return fm;
}

GroupoidHom subgroup_inclusion(const GroupAction& a, const std::vector<int>& sub) {
  const GroupAction restricted = a.restrict_to(sub);
  GroupoidHom f{translation_groupoid(restricted), translation_groupoid(a), {}, {}};
  const int h = a.group().order();
  const int k = static_cast<int>(sub.size());
  for (int x = 0; x < a.points(); ++x) f.f0.push_back(x);
  for (int x = 0; x < a.points(); ++x) {
    for (int i = 0; i < k; ++i) f.f1.push_back(x * h + sub[i]);
  }
  return f;
}

namespace {
Verdict hom_verdict(const GroupoidHom& f) {
  const CheckReport r = check_homomorphism(f);
  return {r.passed(), r.passed() ? "" : "not a homomorphism: " + r.first_failure()};
}
}  // namespace

Verdict is_covering_hom(const GroupoidHom& f) {
  if (auto v = hom_verdict(f); !v) return v;
  const auto& H = f.source;
  const auto& G = f.target;
  std::vector<int> fiber(G.objects(), 0);
  for (int y : f.f0) ++fiber[y];
  for (int x = 0; x < G.objects(); ++x) {
    if (fiber[x] == 0) return {false, "object map misses target object " + std::to_string(x)};
  }
  for (int g = 0; g < G.morphisms(); ++g) {
    if (fiber[G.source(g)] != fiber[G.target(g)]) {
      return {false, "object fibers over " + std::to_string(G.source(g)) + " and " + std::to_string(G.target(g)) +
                         " differ in size (" + std::to_string(fiber[G.source(g)]) + " vs " +
                         std::to_string(fiber[G.target(g)]) + ")"};
    }
  }
  std::set<std::tuple<int, int, int>> seen;
  for (int m = 0; m < H.morphisms(); ++m) {
    if (!seen.emplace(f.f1[m], H.source(m), H.target(m)).second) {
      return {false, "not faithful: morphism " + std::to_string(m) + " collides with another over the same ends"};
    }
  }
  return {true, ""};
}

Verdict is_strict_covering_hom(const GroupoidHom& f) {
  if (auto v = hom_verdict(f); !v) return v;
  const auto& H = f.source;
  const auto& G = f.target;
  std::set<std::pair<int, int>> seen;
  for (int m = 0; m < H.morphisms(); ++m) {
    if (!seen.emplace(f.f1[m], H.source(m)).second) {
      return {false, "morphism " + std::to_string(m) + " repeats a point of the fibered product"};
    }
  }
  std::size_t product = 0;
  for (int y = 0; y < H.objects(); ++y) product += G.out(f.f0[y]).size();
  if (seen.size() != product) {
    return {false, "source has " + std::to_string(seen.size()) + " morphisms but the fibered product has " +
                       std::to_string(product) + " points"};
  }
  return {true, ""};
}

EquivalenceReport is_equivalence(const GroupoidHom& f) {
  EquivalenceReport r;
  r.homomorphism = hom_verdict(f);
  if (!r.homomorphism) {
    r.essentially_surjective = {false, "skipped"};
    r.fully_faithful = {false, "skipped"};
    return r;
  }
  const auto& H = f.source;
  const auto& G = f.target;

  std::vector<bool> reached(G.objects(), false);
  for (int y = 0; y < H.objects(); ++y) {
    for (int g : G.out(f.f0[y])) reached[G.target(g)] = true;
  }
  const auto miss = std::find(reached.begin(), reached.end(), false);
  r.essentially_surjective =
      miss == reached.end()
          ? Verdict{true, ""}
          : Verdict{false, "target object " + std::to_string(miss - reached.begin()) + " is not reached"};

  std::vector<int> fiber(G.objects(), 0);
  for (int y : f.f0) ++fiber[y];
  std::size_t product = 0;
  for (int y = 0; y < H.objects(); ++y) {
    for (int g : G.out(f.f0[y])) product += static_cast<std::size_t>(fiber[G.target(g)]);
  }
  std::set<std::tuple<int, int, int>> seen;
  r.fully_faithful = {true, ""};
  for (int m = 0; m < H.morphisms(); ++m) {
    if (!seen.emplace(H.source(m), H.target(m), f.f1[m]).second) {
      r.fully_faithful = {false, "not injective: morphism " + std::to_string(m) + " repeats (s, t, f1)"};
      break;
    }
  }
  if (r.fully_faithful && seen.size() != product) {
    r.fully_faithful = {false, "not surjective: " + std::to_string(seen.size()) + " morphisms for " +
                                   std::to_string(product) + " points of the fibered product"};
  }
  return r;
}

// ----------------------------------------------------------------- Morita

QuotientModel quotient_model(const GroupAction& a, const std::vector<int>& n) {
  const FiniteGroup& g = a.group();
  if (!g.is_normal(n)) throw InvalidModelError("subgroup is not normal");
  QuotientModel q{GroupAction::trivial(FiniteGroup::cyclic(1), 0), {}, {}};

  q.element_class.assign(g.order(), -1);
  std::vector<int> element_rep;
  for (int x = 0; x < g.order(); ++x) {
    if (q.element_class[x] >= 0) continue;
    for (int k : n) q.element_class[g.mul(x, k)] = static_cast<int>(element_rep.size());
    element_rep.push_back(x);
  }
  q.point_class.assign(a.points(), -1);
  std::vector<int> point_rep;
  for (int p = 0; p < a.points(); ++p) {
    if (q.point_class[p] >= 0) continue;
    for (int k : n) q.point_class[a.apply(k, p)] = static_cast<int>(point_rep.size());
    point_rep.push_back(p);
  }
  const int c = static_cast<int>(element_rep.size());
  std::vector<std::vector<int>> table(c, std::vector<int>(c));
  std::vector<std::vector<int>> act(c, std::vector<int>(point_rep.size()));
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) table[i][j] = q.element_class[g.mul(element_rep[i], element_rep[j])];
    for (std::size_t p = 0; p < point_rep.size(); ++p) act[i][p] = q.point_class[a.apply(element_rep[i], point_rep[p])];
  }
  q.action = GroupAction(FiniteGroup::from_table(std::move(table)), std::move(act));
  return q;
}

namespace {

GroupoidHom quotient_hom(const QuotientModel& from, const QuotientModel& to, const GroupAction& a) {
  GroupoidHom e{translation_groupoid(from.action), translation_groupoid(to.action), {}, {}};
  const int nf = from.action.points();
  const int hf = from.action.group().order();
  const int ht = to.action.group().order();
  e.f0.assign(nf, -1);
  for (int p = 0; p < a.points(); ++p) e.f0[from.point_class[p]] = to.point_class[p];
  std::vector<int> coset_image(hf, -1);
  for (int g = 0; g < a.group().order(); ++g) coset_image[from.element_class[g]] = to.element_class[g];
  for (int x = 0; x < nf; ++x) {
    for (int c = 0; c < hf; ++c) e.f1.push_back(e.f0[x] * ht + coset_image[c]);
  }
  return e;
}

void require_free(const QuotientModel& k, const std::vector<int>& ni, const char* name) {
  std::set<int> classes;
  for (int x : ni) classes.insert(k.element_class[x]);
  for (int c : classes) {
    if (c == 0) continue;
    for (int p = 0; p < k.action.points(); ++p) {
      if (k.action.apply(c, p) == p) {
        throw InvalidModelError(std::string(name) + "/(N1 n N2) does not act freely on S/(N1 n N2)");
      }
    }
  }
}

}  // namespace

MoritaTriple morita_triple(const GroupAction& a, const std::vector<int>& n1, const std::vector<int>& n2) {
  const FiniteGroup& g = a.group();
  if (!g.is_normal(n1)) throw InvalidModelError("N1 is not a normal subgroup");
  if (!g.is_normal(n2)) throw InvalidModelError("N2 is not a normal subgroup");
  std::vector<int> both;
  std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(), std::back_inserter(both));

  MoritaTriple m{both,
                 quotient_model(a, both),
                 quotient_model(a, n1),
                 quotient_model(a, n2),
                 FiniteGroupoid::unit(0),
                 FiniteGroupoid::unit(0),
                 FiniteGroupoid::unit(0),
                 {},
                 {}};
  require_free(m.k_model, n1, "N1");
  require_free(m.k_model, n2, "N2");
  m.k = translation_groupoid(m.k_model.action);
  m.g1 = translation_groupoid(m.g1_model.action);
  m.g2 = translation_groupoid(m.g2_model.action);
  m.e1 = quotient_hom(m.k_model, m.g1_model, a);
  m.e2 = quotient_hom(m.k_model, m.g2_model, a);
  return m;
}

}  // namespace orbconf
