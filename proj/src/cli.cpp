#include "orbconf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <climits>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "orbconf/arrangement.hpp"
#include "orbconf/covering.hpp"
#include "orbconf/errors.hpp"
#include "orbconf/groupoid.hpp"
#include "orbconf/obstruction.hpp"
#include "orbconf/orbit_config.hpp"
#include "orbconf/orbmodel.hpp"
#include "orbconf/serialize.hpp"

namespace orbconf::cli {

namespace {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  double epsilon = 1e-9;
  int samples = 200;
  int window = 3;
  std::string format = "json";
  std::string out;

  // arrangement
  std::string builder;
  int n = -1;
  int m = 2;
  bool enumerate = false;
  bool simplicial = false;
  int primes = 0;
  // verify-cover
  std::string map;
  // obstruction
  std::string action;
  // groupoid
  std::string check = "axioms";

  Json to_json() const {
    Json j{{"subcommand", subcommand}, {"inputs", inputs},   {"seed", seed},    {"epsilon", epsilon},
           {"samples", samples},       {"window", window},   {"format", format}, {"out", out}};
    if (subcommand == "arrangement") {
      j["builder"] = builder;
      j["n"] = n;
      j["m"] = m;
      j["enumerate"] = enumerate;
      j["simplicial"] = simplicial;
      j["primes"] = primes;
    } else if (subcommand == "verify-cover") {
      j["map"] = map;
      j["n"] = n;
    } else if (subcommand == "obstruction") {
      j["action"] = action;
      j["m"] = m;
      j["n"] = n;
    } else if (subcommand == "groupoid") {
      j["check"] = check;
      j["n"] = n;
    }
    return j;
  }
};

struct Outcome {
  Json result;
  int code = Exit::ok;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

Json polynomial_json(const Polynomial& p) { return Json{{"coeffs", to_json(p)}, {"text", p.str()}}; }

// ------------------------------------------------------------------ classify

Outcome cmd_classify(const RunConfig& cfg) {
  const Json spec = read_json_file(cfg.inputs.at(0));
  const Orbifold2D o = orbifold_from_json(spec);
  return {Json{{"orbifold", to_json(o)}, {"classification", to_json(classify(o))}}};
}

// --------------------------------------------------------------- arrangement

ArrangementSpec arrangement_input(const RunConfig& cfg) {
  if (!cfg.inputs.empty()) {
    if (!cfg.builder.empty()) throw ParseError("give either an arrangement file or --builder, not both");
    return arrangement_from_json(read_json_file(cfg.inputs[0]));
  }
  if (cfg.builder.empty()) throw ParseError("arrangement needs a spec file or --builder");
  if (cfg.n < 0) throw ParseError("--builder needs --n");
  if (cfg.builder == "case1") return case1_arrangement(cfg.n, cfg.m);
  if (cfg.builder == "case3X") return case3_X_arrangement(cfg.n);
  if (cfg.builder == "braid") return braid_arrangement(cfg.n);
  throw ParseError("unknown builder '" + cfg.builder + "' (case1, case3X, braid)");
}

Outcome cmd_arrangement(const RunConfig& cfg) {
  const ArrangementSpec spec = arrangement_input(cfg);
  const bool rational = spec.rational().has_value();
  const ArrangementPoset poset = flat_poset(spec);
  const Polynomial chi = poset.characteristic();

  Json flats = Json::object();
  for (const auto& [dim, count] : poset.count_by_dim()) flats[std::to_string(dim)] = count;

  Json r{{"arrangement", to_json(spec)},
         {"field", spec.field().name()},
         {"hyperplane_count", spec.size()},
         {"central", spec.is_central()},
         {"rank", poset.rank()},
         {"flat_count", poset.size()},
         {"flats_by_dim", flats},
         {"characteristic_polynomial", polynomial_json(chi)},
         {"poincare_polynomial", polynomial_json(poset.poincare())}};

  std::optional<ChamberCount> count;
  if (rational) {
    count = chamber_count(poset);
    r["chambers"] = Json{{"total", to_json(count->total)}, {"bounded", to_json(count->bounded)}};
  } else {
    r["chambers"] = Json{{"applicable", false}, {"reason", "coefficients are not real"}};
  }

  if (cfg.enumerate) {
    if (!rational) throw NotRealError("chamber enumeration needs a rational arrangement");
    const ChamberSet set = enumerate_chambers(spec);
    r["enumeration"] = Json{{"count", set.size()}, {"matches_zaslavsky", Integer(set.size()) == count->total}};
  }

  Json simp;
  if (!spec.is_central() || !rational) {
    if (cfg.simplicial) {
      if (!spec.is_central()) throw CentralityError("simpliciality is defined for central arrangements");
      throw NotRealError("simpliciality needs a rational arrangement");
    }
    simp = Json{{"applicable", false}, {"reason", !spec.is_central() ? "not central" : "coefficients are not real"}};
  } else {
    try {
      const SimplicialCertificate c = is_simplicial(spec);
      simp = Json{{"applicable", true},
                  {"simplicial", c.simplicial},
                  {"rank", c.rank},
                  {"chambers", c.chambers},
                  {"wall_counts", c.wall_counts},
                  {"definition", c.definition}};
    } catch (const SizeError& e) {
      if (cfg.simplicial) throw;
      simp = Json{{"applicable", true}, {"skipped", e.what()}};
    }
  }
  r["simplicial"] = simp;

  if (rational) {
    r["bad_primes"] = bad_primes(spec);
    if (cfg.primes > 0) {
      Json ff = Json::array();
      for (long q : good_primes(spec, cfg.primes)) {
        const Integer points = finite_field_count(spec, q);
        const Integer expected = chi.eval(Integer(q));
        ff.push_back(
            Json{{"q", q}, {"points", to_json(points)}, {"chi_q", to_json(expected)}, {"agree", points == expected}});
      }
      r["finite_field"] = ff;
    }
  }
  return {r};
}

// -------------------------------------------------------------- verify-cover

Outcome cmd_verify_cover(const RunConfig& cfg) {
  std::string text = cfg.map;
  if (text == "squaring" || text == "qE") {
    if (cfg.n < 1) throw ParseError("map '" + text + "' needs --n");
    text += "(" + std::to_string(cfg.n) + ")";
  }
  CoverPlan plan;
  plan.samples = cfg.samples;
  plan.seed = cfg.seed;
  plan.window = cfg.window;
  plan.tol.eps = cfg.epsilon;
  const CoveringReport report = verify_cover(CoverMapId::parse(text), plan);
  return {to_json(report), report.pass ? Exit::ok : Exit::verification_failed};
}

// --------------------------------------------------------------- obstruction

Outcome cmd_obstruction(const RunConfig& cfg) {
  const int n = cfg.n < 0 ? 2 : cfg.n;
  if (!cfg.inputs.empty()) {
    const Json spec = read_json_file(cfg.inputs[0]);
    check_schema(spec);
    if (spec.is_object() && spec.contains("model")) {
      const GroupAction a = action_model_from_json(spec["model"]);
      const FiniteWitnessReport w = finite_quasifibration_witness(a, n);
      return {Json{{"model", "finite"}, {"points", a.points()}, {"group_order", a.group().order()}, {"witness", to_json(w)}}};
    }
    const PlanarAction a = action_from_json(spec);
    return {Json{{"model", "planar"}, {"action", to_json(a)}, {"witness", to_json(quasifibration_witness(a, n))}}};
  }
  PlanarAction a = PlanarAction::sign_flip();
  if (cfg.action == "rotation") {
    a = PlanarAction::rotation(cfg.m);
  } else if (cfg.action == "integer_dihedral") {
    a = PlanarAction::integer_dihedral();
  } else if (cfg.action != "sign_flip") {
    throw ParseError("obstruction needs an action file or --action rotation|sign_flip|integer_dihedral");
  }
  return {Json{{"model", "planar"}, {"action", to_json(a)}, {"witness", to_json(quasifibration_witness(a, n))}}};
}

// ------------------------------------------------------------------ groupoid

Json size_json(const FiniteGroupoid& g) { return Json{{"objects", g.objects()}, {"morphisms", g.morphisms()}}; }

std::vector<int> subgroup_or_all(const FiniteGroup& g, const Json& model, const char* key) {
  if (model.contains(key)) return subgroup_from_json(g, model[key]);
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return all;
}

Outcome cmd_groupoid(const RunConfig& cfg) {
  const Json model = read_json_file(cfg.inputs.at(0));
  if (!model.is_object()) throw ParseError("groupoid model must be a JSON object");
  check_schema(model);

  std::optional<GroupAction> action;
  FiniteGroupoid g;
  if (model.contains("action")) {
    action = action_model_from_json(model["action"]);
    g = translation_groupoid(*action);
  } else if (model.contains("groupoid")) {
    g = groupoid_from_json(model["groupoid"]);
  } else {
    throw ParseError("groupoid model needs \"action\" or \"groupoid\"");
  }
  if (model.contains("corrupt")) {
    for (const auto& t : model["corrupt"]) {
      const auto v = t.get<std::vector<int>>();
      if (v.size() != 3) throw ParseError("corrupt entries are [g, f, h]");
      try {
        g.set_composition(v[0], v[1], v[2]);
      } catch (const std::logic_error& e) {
        throw ParseError(std::string("corrupt entry: ") + e.what());
      }
    }
  }
  int n = cfg.n;
  if (n < 0) n = model.value("n", 2);

  auto need_action = [&]() -> const GroupAction& {
    if (!action) throw ParseError("check '" + cfg.check + "' needs an \"action\" model");
    return *action;
  };

  Json r{{"check", cfg.check}, {"groupoid", size_json(g)}};
  bool passed = false;

  if (cfg.check == "axioms") {
    const CheckReport axioms = check_axioms(g);
    r["axioms"] = to_json(axioms);
    passed = axioms.passed();
  } else if (cfg.check == "orbits") {
    const CheckReport axioms = check_axioms(g);
    const OrbitSpace o = orbit_space(g);
    r["axioms"] = to_json(axioms);
    r["orbit_count"] = o.orbits.size();
    r["orbits"] = o.orbits;
    passed = axioms.passed();
  } else if (cfg.check == "config") {
    const ConfigGroupoid c = configuration_groupoid(g, n);
    const CheckReport axioms = check_axioms(c.groupoid);
    r["n"] = n;
    r["configuration"] = size_json(c.groupoid);
    r["empty_warning"] = c.empty_warning;
    r["object_tuples"] = c.object_tuples;
    r["axioms"] = to_json(axioms);
    passed = axioms.passed();
  } else if (cfg.check == "forget") {
    const ForgetMap f = forget_map(g, n);
    const CheckReport functor = check_homomorphism(f.hom);
    std::vector<int> fiber(f.lower.groupoid.objects(), 0);
    for (int y : f.hom.f0) ++fiber[y];
    Json fibers = Json::array();
    for (int y = 0; y < f.lower.groupoid.objects(); ++y) {
      fibers.push_back(Json{{"base", f.lower.object_tuples[y]}, {"size", fiber[y]}});
    }
    r["n"] = n;
    r["upper"] = size_json(f.upper.groupoid);
    r["lower"] = size_json(f.lower.groupoid);
    r["functor"] = to_json(functor);
    r["fibers"] = fibers;
    r["covering"] = to_json(is_covering_hom(f.hom));
    passed = functor.passed();
  } else if (cfg.check == "covering") {
    const GroupAction& a = need_action();
    const std::vector<int> super = subgroup_or_all(a.group(), model, "super");
    if (!model.contains("sub")) throw ParseError("covering check needs \"sub\"");
    const std::vector<int> sub = subgroup_from_json(a.group(), model["sub"]);
    std::vector<int> local;
    for (int h : sub) {
      const auto it = std::lower_bound(super.begin(), super.end(), h);
      if (it == super.end() || *it != h) throw InvalidModelError("\"sub\" is not contained in \"super\"");
      local.push_back(static_cast<int>(it - super.begin()));
    }
    const GroupoidHom f = subgroup_inclusion(a.restrict_to(super), local);
    const Verdict covering = is_covering_hom(f);
    r["sub"] = sub;
    r["super"] = super;
    r["source"] = size_json(f.source);
    r["target"] = size_json(f.target);
    r["homomorphism"] = to_json(check_homomorphism(f));
    r["covering"] = to_json(covering);
    r["strict_covering"] = to_json(is_strict_covering_hom(f));
    passed = covering.ok;
  } else if (cfg.check == "morita") {
    const GroupAction& a = need_action();
    if (!model.contains("N1") || !model.contains("N2")) throw ParseError("morita check needs \"N1\" and \"N2\"");
    const MoritaTriple t =
        morita_triple(a, subgroup_from_json(a.group(), model["N1"]), subgroup_from_json(a.group(), model["N2"]));
    const EquivalenceReport e1 = is_equivalence(t.e1), e2 = is_equivalence(t.e2);
    const CheckReport ak = check_axioms(t.k), a1 = check_axioms(t.g1), a2 = check_axioms(t.g2);
    r["intersection"] = t.intersection;
    r["k"] = size_json(t.k);
    r["g1"] = size_json(t.g1);
    r["g2"] = size_json(t.g2);
    r["axioms"] = Json{{"k", to_json(ak)}, {"g1", to_json(a1)}, {"g2", to_json(a2)}};
    r["e1"] = to_json(e1);
    r["e2"] = to_json(e2);
    passed = e1.ok() && e2.ok() && ak.passed() && a1.passed() && a2.passed();
  } else {
    throw ParseError("unknown check '" + cfg.check + "' (axioms, orbits, config, forget, covering, morita)");
  }
  r["passed"] = passed;
  return {r, passed ? Exit::ok : Exit::verification_failed};
}

// ------------------------------------------------------------------ rendering

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    if (j.empty()) rows.emplace_back(path, "{}");
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
    if (flat) {
      std::string line;
      for (const auto& v : j) line += (line.empty() ? "" : " ") + scalar(v);
      rows.emplace_back(path, "[" + line + "]");
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows.emplace_back(path, scalar(j));
  }
}

std::string render_table(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream s;
  for (const auto& [k, v] : rows) s << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return s.str();
}

int error_exit(std::ostream& err, int code, const std::string& message) {
  err << kToolName << ": error: " << message << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Orbit configuration toolkit: orbifolds, arrangements, covers and groupoids", kToolName};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--seed", cfg.seed, "RNG seed recorded in every report");
  app.add_option("--epsilon", cfg.epsilon, "Tolerance for approximate comparisons")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Sample count")->check(CLI::Range(1, INT_MAX));
  app.add_option("--window", cfg.window, "Period window for exponential fibers")->check(CLI::Range(1, INT_MAX));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", cfg.out, "Write the report to this file instead of stdout");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a 2-orbifold spec");
  classify_cmd->add_option("spec", cfg.inputs, "Orbifold spec (JSON)")->required();

  auto* arr = app.add_subcommand("arrangement", "Invariants of a hyperplane arrangement");
  arr->add_option("spec", cfg.inputs, "Arrangement spec (JSON)");
  arr->add_option("--builder", cfg.builder, "Named arrangement")->check(CLI::IsMember({"case1", "case3X", "braid"}));
  arr->add_option("--n", cfg.n, "Builder size")->check(CLI::NonNegativeNumber);
  arr->add_option("--m", cfg.m, "Rotation order for case1")->check(CLI::Range(1, INT_MAX));
  arr->add_flag("--enumerate", cfg.enumerate, "Enumerate chambers with witnesses");
  arr->add_flag("--simplicial", cfg.simplicial, "Require the simpliciality test (exit 4 beyond guard rails)");
  arr->add_option("--primes", cfg.primes, "Finite-field counts for this many good primes")->check(CLI::NonNegativeNumber);

  auto* cover = app.add_subcommand("verify-cover", "Check fibers and deck identities of a covering map");
  cover->add_option("map,--map", cfg.map, "q | squaring | qE");
  cover->add_option("--n", cfg.n, "Number of coordinates")->check(CLI::Range(1, INT_MAX));

  auto* obs = app.add_subcommand("obstruction", "Quasifibration witness for a planar or finite action");
  obs->add_option("spec", cfg.inputs, "Action spec or finite model (JSON)");
  obs->add_option("--action", cfg.action, "rotation | sign_flip | integer_dihedral");
  obs->add_option("--m", cfg.m, "Rotation order")->check(CLI::Range(1, INT_MAX));
  obs->add_option("--n", cfg.n, "Configuration size")->check(CLI::Range(2, INT_MAX));

  auto* grp = app.add_subcommand("groupoid", "Verify a finite groupoid model");
  grp->add_option("model", cfg.inputs, "Groupoid model (JSON)")->required();
  grp->add_option("--check", cfg.check, "axioms | orbits | config | forget | covering | morita");
  grp->add_option("--n", cfg.n, "Configuration size")->check(CLI::Range(1, INT_MAX));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return Exit::invalid_input;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand == "verify-cover" && cfg.map.empty()) return error_exit(err, Exit::invalid_input, "verify-cover needs a map id");

  Outcome outcome;
  try {
    if (cfg.subcommand == "classify") {
      outcome = cmd_classify(cfg);
    } else if (cfg.subcommand == "arrangement") {
      outcome = cmd_arrangement(cfg);
    } else if (cfg.subcommand == "verify-cover") {
      outcome = cmd_verify_cover(cfg);
    } else if (cfg.subcommand == "obstruction") {
      outcome = cmd_obstruction(cfg);
    } else {
      outcome = cmd_groupoid(cfg);
    }
  } catch (const ReflectorError& e) {
    return error_exit(err, Exit::reflector, e.what());
  } catch (const SizeError& e) {
    return error_exit(err, Exit::guard_rail, e.what());
  } catch (const NoWitnessError& e) {
    return error_exit(err, Exit::no_witness, e.what());
  } catch (const SamplingExhaustedError& e) {
    return error_exit(err, Exit::verification_failed, e.what());
  } catch (const Error& e) {
    return error_exit(err, Exit::invalid_input, e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_exit(err, Exit::invalid_input, e.what());
  } catch (const std::exception& e) {
    return error_exit(err, Exit::unexpected, e.what());
  }

  const Json report{{"tool", kToolName},
                    {"version", kVersion},
                    {"subcommand", cfg.subcommand},
                    {"config", cfg.to_json()},
                    {"result", outcome.result}};
  const std::string text = cfg.format == "json" ? report.dump(2) + "\n" : render_table(report);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!(file << text)) return error_exit(err, Exit::invalid_input, "cannot write '" + cfg.out + "'");
  }
  if (outcome.code != Exit::ok) err << kToolName << ": " << cfg.subcommand << " reported a failed check\n";
  return outcome.code;
}

}  // namespace orbconf::cli
