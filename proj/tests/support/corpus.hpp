#pragma once

// Named finite models shared by the unit tests and the acceptance run.

#include <string>
#include <utility>
#include <vector>

#include "orbconf/arrangement_spec.hpp"
#include "orbconf/groupoid.hpp"
#include "orbconf/orbit_config.hpp"

namespace orbconf::corpus {

/// Quaternion group {+-1, +-i, +-j, +-k} by multiplication table.
inline FiniteGroup quaternion() {
  // index = 4 * sign + unit, unit in {1, i, j, k}
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int s = (a / 4 + b / 4 + sign_mul[ua][ub]) % 2;
      t[a][b] = 4 * s + unit_mul[ua][ub];
    }
  }
  return FiniteGroup::from_table(std::move(t));
}

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// One representative of every isomorphism class of order <= 8.
inline std::vector<NamedGroup> small_groups() {
  std::vector<NamedGroup> out;
  for (int n = 1; n <= 8; ++n) out.push_back({"C" + std::to_string(n), FiniteGroup::cyclic(n)});
  const auto c2 = FiniteGroup::cyclic(2);
  out.push_back({"C2xC2", FiniteGroup::direct_product(c2, c2)});
  out.push_back({"C2xC4", FiniteGroup::direct_product(c2, FiniteGroup::cyclic(4))});
  out.push_back({"C2xC2xC2", FiniteGroup::direct_product(FiniteGroup::direct_product(c2, c2), c2)});
  out.push_back({"D3", FiniteGroup::dihedral(3)});
  out.push_back({"D4", FiniteGroup::dihedral(4)});
  out.push_back({"Q8", quaternion()});
  return out;
}

/// Groups of order <= 16 used for the quotient-model suite.
inline std::vector<NamedGroup> morita_groups() {
  std::vector<NamedGroup> out;
  for (int n = 1; n <= 16; ++n) out.push_back({"C" + std::to_string(n), FiniteGroup::cyclic(n)});
  const auto c2 = FiniteGroup::cyclic(2);
  const auto c4 = FiniteGroup::cyclic(4);
  const auto c2c2 = FiniteGroup::direct_product(c2, c2);
  out.push_back({"C2xC2", c2c2});
  out.push_back({"C2xC4", FiniteGroup::direct_product(c2, c4)});
  out.push_back({"C2xC2xC2", FiniteGroup::direct_product(c2c2, c2)});
  out.push_back({"C3xC3", FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3))});
  out.push_back({"C2xC6", FiniteGroup::direct_product(c2, FiniteGroup::cyclic(6))});
  out.push_back({"C4xC4", FiniteGroup::direct_product(c4, c4)});
  out.push_back({"C2xC8", FiniteGroup::direct_product(c2, FiniteGroup::cyclic(8))});
  out.push_back({"C2xC2xC4", FiniteGroup::direct_product(c2c2, c4)});
  out.push_back({"C2^4", FiniteGroup::direct_product(c2c2, c2c2)});
  for (int n = 3; n <= 8; ++n) out.push_back({"D" + std::to_string(n), FiniteGroup::dihedral(n)});
  out.push_back({"Q8", quaternion()});
  out.push_back({"C2xD4", FiniteGroup::direct_product(c2, FiniteGroup::dihedral(4))});
  out.push_back({"C2xQ8", FiniteGroup::direct_product(c2, quaternion())});
  return out;
}

struct NamedAction {
  std::string name;
  GroupAction action;
};

/// Regular, coset, and two-orbit coset actions of `g` on at most `max_points` points.
inline std::vector<NamedAction> actions_of(const NamedGroup& g, int max_points) {
  std::vector<NamedAction> out;
  std::vector<std::pair<std::string, GroupAction>> cosets;
  const auto subs = g.group.subgroups();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    GroupAction a = GroupAction::cosets(g.group, subs[i]);
    if (a.points() <= max_points) cosets.emplace_back(g.name + "/K" + std::to_string(i), std::move(a));
  }
  for (const auto& [name, a] : cosets) out.push_back({name, a});
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (std::size_t j = i; j < cosets.size(); ++j) {
      if (cosets[i].second.points() + cosets[j].second.points() > max_points) continue;
      out.push_back({cosets[i].first + "+" + cosets[j].first,
                     GroupAction::disjoint_union(cosets[i].second, cosets[j].second)});
    }
  }
  return out;
}

/// Rational arrangements with integer coefficients used for the chamber and
/// finite-field suites.
inline std::vector<ArrangementSpec> named_arrangements() {
  std::vector<ArrangementSpec> out;
  for (int n = 1; n <= 4; ++n) out.push_back(braid_arrangement(n));
  for (int n = 2; n <= 3; ++n) out.push_back(case1_arrangement(n, 2));
  for (int n = 0; n <= 2; ++n) out.push_back(case3_X_arrangement(n));
  return out;
}

}  // namespace orbconf::corpus
