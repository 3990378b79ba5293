#include "orbconf/serialize.hpp"

#include <algorithm>
#include <map>

namespace orbconf {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw ParseError(std::string("unknown key '") + key + "' in " + what);
    }
  }
}

std::vector<int> int_list(const Json& j) { return j.get<std::vector<int>>(); }

}  // namespace

void check_schema(const Json& j) {
  if (!j.is_object() || !j.contains("schema")) return;
  if (!j["schema"].is_number_integer() || j["schema"].get<int>() != kSchemaVersion) {
    throw ParseError("unsupported schema version " + j["schema"].dump() + " (expected 1)");
  }
}

// ------------------------------------------------------------------ scalars

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_float()) throw ParseError("floating-point literal " + j.dump() + " where an exact rational is required");
  throw ParseError("expected a rational, got " + j.dump());
}

Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(to_json(r));
  return Json{{"m", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (!j.is_object()) return Cyclotomic(rational_from_json(j));
  return guarded("cyclotomic", [&] {
    reject_unknown_keys(j, {"m", "coeffs"}, "cyclotomic number");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return Cyclotomic(j.at("m").get<int>(), std::move(coeffs));
  });
}

Json to_json(const ComplexPoint& z) {
  if (z.is_exact()) {
    return Json{{"re", to_json(z.gaussian().re)}, {"im", to_json(z.gaussian().im)}, {"mode", "exact"}};
  }
  return Json{{"re", z.numeric().real()}, {"im", z.numeric().imag()}, {"mode", "approx"}};
}

ComplexPoint complex_from_json(const Json& j) {
  if (!j.is_object()) return ComplexPoint(rational_from_json(j));
  return guarded("complex point", [&] {
    reject_unknown_keys(j, {"re", "im", "mode"}, "complex point");
    const std::string mode = j.value("mode", "exact");
    if (mode == "approx") {
      return ComplexPoint::approx({j.at("re").get<double>(), j.value("im", 0.0)});
    }
    if (mode != "exact") throw ParseError("complex point mode must be 'exact' or 'approx'");
    return ComplexPoint::exact(rational_from_json(j.at("re")), j.contains("im") ? rational_from_json(j["im"]) : Rational(0));
  });
}

Json to_json(const Integer& z) {
  if (z.fits_slong_p() && abs(z) < (Integer(1) << 53)) return z.get_si();
  return z.get_str();
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

// ---------------------------------------------------------------- orbifolds

Json to_json(const Orbifold2D& o) {
  return Json{{"genus", o.genus},
              {"orientable", o.orientable},
              {"punctures", o.punctures},
              {"boundary", o.boundary_circles},
              {"cones", o.cone_orders}};
}

Orbifold2D orbifold_from_json(const Json& j) {
  require_object(j, "orbifold spec");
  check_schema(j);
  return guarded("orbifold spec", [&] {
    for (const char* key : {"reflectors", "corner_reflectors", "mirrors"}) {
      if (!j.contains(key)) continue;
      const Json& v = j[key];
      const bool present = (v.is_number() && v.get<double>() != 0) || (v.is_array() && !v.empty()) ||
                           (v.is_boolean() && v.get<bool>());
      if (present) throw ReflectorError("reflector lines and corner reflectors are not supported");
    }
    reject_unknown_keys(j,
                        {"schema", "name", "surface", "genus", "orientable", "punctures", "boundary", "cones",
                         "reflectors", "corner_reflectors", "mirrors"},
                        "orbifold spec");
    int genus = 0, punctures = 0;
    bool orientable = true;
    const std::string surface = j.value("surface", std::string("sphere"));
    if (surface == "plane") {
      punctures = 1;
    } else if (surface == "torus") {
      genus = 1;
    } else if (surface == "projective_plane") {
      genus = 1;
      orientable = false;
    } else if (surface != "sphere") {
      throw ParseError("unknown surface '" + surface + "' (sphere, plane, torus, projective_plane)");
    }
    return make_orbifold(j.value("genus", genus), j.value("orientable", orientable), j.value("punctures", punctures),
                         j.value("boundary", 0), j.value("cones", std::vector<int>{}));
  });
}

Json to_json(const Classification& c) {
  Json notes = c.notes;
  return Json{{"is_bad", c.is_bad},
              {"is_good", c.is_good},
              {"pi1_infinite", to_string(c.pi1_infinite)},
              {"is_aspherical", to_string(c.is_aspherical)},
              {"euler_orb", to_json(c.euler_orb)},
              {"notes", notes}};
}

Json to_json(const PlanarAction& a) {
  if (const auto* r = std::get_if<CyclicRotation>(&a.kind())) {
    return Json{{"kind", "rotation"}, {"m", r->order}, {"center", to_json(r->center)}};
  }
  if (std::holds_alternative<IntegerDihedral>(a.kind())) return Json{{"kind", "integer_dihedral"}};
  return Json{{"kind", "sign_flip"}};
}

PlanarAction action_from_json(const Json& j) {
  require_object(j, "action spec");
  check_schema(j);
  return guarded("action spec", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rotation") {
      reject_unknown_keys(j, {"schema", "kind", "m", "center"}, "rotation spec");
      return PlanarAction::rotation(j.at("m").get<int>(),
                                    j.contains("center") ? complex_from_json(j["center"]) : ComplexPoint(0));
    }
    if (kind == "integer_dihedral") return PlanarAction::integer_dihedral();
    if (kind == "sign_flip") return PlanarAction::sign_flip();
    throw ParseError("unknown action kind '" + kind + "'");
  });
}

// ------------------------------------------------------------- arrangements

Json to_json(const ArrangementSpec& a) {
  const bool rational = a.field().is_rational();
  Json field = rational ? Json{{"type", "Q"}} : Json{{"type", "cyclotomic"}, {"m", a.field().order}};
  auto entry = [&](const Cyclotomic& c) -> Json {
    if (rational) return to_json(*c.rational_value());
    return to_json(c.embed(a.field().order));
  };
  Json rows = Json::array();
  for (const auto& r : a.rows()) {
    Json normal = Json::array();
    for (const auto& c : r.normal) normal.push_back(entry(c));
    rows.push_back(Json{{"normal", normal}, {"offset", entry(r.offset)}});
  }
  return Json{{"dim", a.dim()}, {"field", field}, {"hyperplanes", rows}, {"label", a.label()}};
}

ArrangementSpec arrangement_from_json(const Json& j) {
  require_object(j, "arrangement spec");
  check_schema(j);
  return guarded("arrangement spec", [&] {
    reject_unknown_keys(j, {"schema", "dim", "field", "hyperplanes", "label"}, "arrangement spec");
    FieldTag field{1};
    if (j.contains("field")) {
      const Json& f = j["field"];
      const std::string type = f.at("type").get<std::string>();
      if (type == "cyclotomic") {
        field.order = f.at("m").get<int>();
      } else if (type != "Q") {
        throw ParseError("field type must be 'Q' or 'cyclotomic'");
      }
    }
    std::vector<HyperplaneRow> rows;
    for (const auto& h : j.at("hyperplanes")) {
      HyperplaneRow r;
      for (const auto& c : h.at("normal")) r.normal.push_back(cyclotomic_from_json(c));
      r.offset = h.contains("offset") ? cyclotomic_from_json(h["offset"]) : Cyclotomic(0);
      rows.push_back(std::move(r));
    }
    return ArrangementSpec(j.at("dim").get<int>(), field, j.value("label", std::string("custom")), std::move(rows));
  });
}

// ------------------------------------------------------------------ reports

Json to_json(const CoveringReport& r) {
  Json sizes = Json::array();
  for (const auto& [size, count] : r.fiber_sizes) sizes.push_back(Json{{"size", size}, {"count", count}});
  Json branch = Json::array();
  for (const auto& b : r.branch_points) {
    branch.push_back(Json{{"value", to_json(b.value)},
                          {"preimage", to_json(b.preimage)},
                          {"local_degree", b.local_degree},
                          {"verified", b.verified}});
  }
  Json deck = Json::array();
  for (const auto& d : r.deck_checks) {
    deck.push_back(
        Json{{"name", d.name}, {"mode", d.mode}, {"checked", d.checked}, {"failures", d.failures}, {"passed", d.passed()}});
  }
  const SampleBox& b = r.plan.box;
  Json plan{{"samples", r.plan.samples},
            {"seed", r.plan.seed},
            {"window", r.plan.window},
            {"epsilon", r.plan.tol.eps},
            {"box",
             {{"re", {to_json(b.re_lo), to_json(b.re_hi)}},
              {"im", {to_json(b.im_lo), to_json(b.im_hi)}},
              {"pitch", to_json(b.pitch)},
              {"max_attempts", b.max_attempts}}}};
  Json failures = r.failures;
  return Json{{"map", r.map_id},
              {"declared_degree", r.declared_degree},
              {"fiber_sizes", sizes},
              {"branch_points", branch},
              {"deck_checks", deck},
              {"generic_samples", r.generic_samples},
              {"skipped_singular", r.skipped_singular},
              {"plan", plan},
              {"failures", failures},
              {"pass", r.pass}};
}

Json to_json(const FiberDescriptor& d) {
  Json base = Json::array();
  for (const auto& z : d.base) base.push_back(to_json(z));
  return Json{{"base", base},
              {"orbit_sizes", d.orbit_sizes},
              {"punctures", d.punctures},
              {"domain_punctures", d.domain_punctures},
              {"b1", d.b1}};
}

Json to_json(const WitnessReport& r) {
  return Json{{"action", r.action},
              {"n", r.n},
              {"s", to_json(r.s)},
              {"s_prime", to_json(r.s_prime)},
              {"at_fixed", to_json(r.at_fixed)},
              {"at_free", to_json(r.at_free)},
              {"b1_pair", {r.at_fixed.b1, r.at_free.b1}},
              {"verdict", to_string(r.verdict)},
              {"narrative", r.narrative}};
}

Json to_json(const FiniteFiberDescriptor& d) {
  return Json{{"base", d.base}, {"orbit_sizes", d.orbit_sizes}, {"removed", d.removed}, {"cardinality", d.cardinality}};
}

Json to_json(const FiniteWitnessReport& r) {
  return Json{{"n", r.n},
              {"s", r.s},
              {"s_prime", r.s_prime},
              {"at_fixed", to_json(r.at_fixed)},
              {"at_free", to_json(r.at_free)},
              {"cardinality_pair", {r.at_fixed.cardinality, r.at_free.cardinality}},
              {"verdict", to_string(r.verdict)},
              {"narrative", r.narrative}};
}

// ----------------------------------------------------------------- groupoids

FiniteGroup group_from_json(const Json& j) {
  require_object(j, "group spec");
  return guarded("group spec", [&]() -> FiniteGroup {
    if (j.contains("cyclic")) return FiniteGroup::cyclic(j["cyclic"].get<int>());
    if (j.contains("dihedral")) return FiniteGroup::dihedral(j["dihedral"].get<int>());
    if (j.contains("product")) {
      const Json& p = j["product"];
      if (!p.is_array() || p.empty()) throw ParseError("product needs a nonempty list of groups");
      FiniteGroup g = group_from_json(p[0]);
      for (std::size_t i = 1; i < p.size(); ++i) g = FiniteGroup::direct_product(g, group_from_json(p[i]));
      return g;
    }
    if (j.contains("permutations")) {
      const Json& p = j["permutations"];
      return FiniteGroup::from_permutations(p.at("generators").get<std::vector<Permutation>>(), p.at("degree").get<int>());
    }
    throw ParseError("group spec needs one of cyclic, dihedral, product, permutations");
  });
}

GroupAction action_model_from_json(const Json& j) {
  require_object(j, "action model");
  return guarded("action model", [&]() -> GroupAction {
    if (j.contains("regular")) return GroupAction::regular(group_from_json(j["regular"]));
    if (j.contains("trivial")) return GroupAction::trivial(group_from_json(j["trivial"]), j.at("points").get<int>());
    if (j.contains("cosets")) {
      const FiniteGroup g = group_from_json(j["cosets"]);
      return GroupAction::cosets(g, subgroup_from_json(g, j.at("subgroup")));
    }
    if (j.contains("union")) {
      const Json& u = j["union"];
      if (!u.is_array() || u.empty()) throw ParseError("union needs a nonempty list of actions");
      GroupAction a = action_model_from_json(u[0]);
      for (std::size_t i = 1; i < u.size(); ++i) a = GroupAction::disjoint_union(a, action_model_from_json(u[i]));
      return a;
    }
    if (j.contains("generators")) {
      return GroupAction::from_permutations(j["generators"].get<std::vector<Permutation>>(), j.at("points").get<int>());
    }
    throw ParseError("action model needs one of regular, trivial, cosets, union, generators");
  });
}

std::vector<int> subgroup_from_json(const FiniteGroup& g, const Json& j) {
  return guarded("subgroup spec", [&]() -> std::vector<int> {
    if (j.is_object() && j.contains("elements")) {
      auto e = int_list(j["elements"]);
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      if (!g.is_subgroup(e)) throw InvalidModelError("listed elements do not form a subgroup");
      return e;
    }
    if (j.is_object() && j.contains("generators")) {
      const auto gens = int_list(j["generators"]);
      for (int x : gens) {
        if (x < 0 || x >= g.order()) throw InvalidModelError("subgroup generator out of range");
      }
      return g.generated(gens);
    }
    if (j.is_object() && j.contains("permutations")) {
      const auto& perms = g.permutations();
      std::vector<int> gens;
      for (const auto& p : j["permutations"].get<std::vector<Permutation>>()) {
        const auto it = std::find(perms.begin(), perms.end(), p);
        if (it == perms.end()) throw InvalidModelError("permutation is not an element of the acting group");
        gens.push_back(static_cast<int>(it - perms.begin()));
      }
      return g.generated(gens);
    }
    throw ParseError("subgroup spec needs elements, generators or permutations");
  });
}

Json to_json(const FiniteGroupoid& g) {
  Json morphisms = Json::array();
  Json inverses = Json::array();
  for (int m = 0; m < g.morphisms(); ++m) {
    morphisms.push_back(Json{{"s", g.source(m)}, {"t", g.target(m)}});
    inverses.push_back(g.inverse(m));
  }
  Json ids = Json::array();
  for (int x = 0; x < g.objects(); ++x) ids.push_back(g.identity(x));
  Json comp = Json::array();
  for (const auto& t : g.triples()) comp.push_back({t[0], t[1], t[2]});
  return Json{{"objects", g.objects()},
              {"morphisms", morphisms},
              {"identities", ids},
              {"inverses", inverses},
              {"composition", comp}};
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  require_object(j, "groupoid spec");
  return guarded("groupoid spec", [&] {
    reject_unknown_keys(j, {"objects", "morphisms", "identities", "inverses", "composition"}, "groupoid spec");
    std::vector<int> s, t;
    for (const auto& m : j.at("morphisms")) {
      s.push_back(m.at("s").get<int>());
      t.push_back(m.at("t").get<int>());
    }
    std::vector<std::array<int, 3>> triples;
    for (const auto& c : j.at("composition")) {
      const auto v = int_list(c);
      if (v.size() != 3) throw ParseError("composition entries are [g, f, g o f]");
      triples.push_back({v[0], v[1], v[2]});
    }
    return FiniteGroupoid::from_triples(j.at("objects").get<int>(), std::move(s), std::move(t),
                                        int_list(j.at("identities")), int_list(j.at("inverses")), triples);
  });
}

Json to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

Json to_json(const Verdict& v) { return Json{{"passed", v.ok}, {"detail", v.diagnostic}}; }

Json to_json(const EquivalenceReport& r) {
  return Json{{"passed", r.ok()},
              {"homomorphism", to_json(r.homomorphism)},
              {"essentially_surjective", to_json(r.essentially_surjective)},
              {"fully_faithful", to_json(r.fully_faithful)}};
}

}  // namespace orbconf
