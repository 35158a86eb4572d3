#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <utility>

#include "demo.hpp"
#include "moebius/errors.hpp"
#include "moebius/json_io.hpp"

namespace moebius::cli {

namespace {

struct Outcome {
  Json report;
  int code = kPass;
  /// Artifacts (spaces, tables, models) print as JSON in either format.
  bool artifact = false;
};

Json envelope(const std::string& command) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  return out;
}

/// Prepends the schema version to an artifact so that it stays loadable.
Json artifact(const std::string& command, const Json& body) {
  Json out = envelope(command);
  for (const auto& [key, value] : body.items()) {
    out[key] = value;
  }
  return out;
}

enum class InputKind { space, table, model, tree, metric };

InputKind detect(const Json& j, const std::filesystem::path& path) {
  if (j.is_array() || (j.is_object() && j.contains("entries"))) {
    return InputKind::table;
  }
  if (j.is_object()) {
    if (j.contains("edges")) {
      return InputKind::tree;
    }
    if (j.contains("basepoint")) {
      return InputKind::metric;
    }
    if (j.contains("gp")) {
      return InputKind::model;
    }
    if (j.contains("matrix")) {
      return InputKind::space;
    }
  }
  throw InputError(path.string() +
                   ": not a space, table, model, tree or metric source (no matrix, entries, "
                   "gp, edges or basepoint field)");
}

struct Input {
  std::filesystem::path path;
  Json json;
  InputKind kind;
};

std::vector<Input> load_inputs(const RunConfig& config, std::size_t min, std::size_t max) {
  if (config.inputs.size() < min || config.inputs.size() > max) {
    throw InputError("--input: expected " +
                     (min == max ? std::to_string(min)
                                 : std::to_string(min) + " to " + std::to_string(max)) +
                     " file(s), got " + std::to_string(config.inputs.size()));
  }
  std::vector<Input> out;
  for (const auto& path : config.inputs) {
    Json j = load_json_file(path);
    const InputKind kind = detect(j, path);
    out.push_back({path, std::move(j), kind});
  }
  return out;
}

SemiMetricSpace require_space(const Input& in) {
  if (in.kind != InputKind::space) {
    throw InputError(in.path.string() + ": expected a semi-metric space");
  }
  return space_from_json(in.json);
}

SemiMetricSpace require_valid_space(const Input& in) {
  SemiMetricSpace space = require_space(in);
  const auto report = validate_semimetric(space);
  if (!report.ok()) {
    throw PreconditionError(in.path.string() + " is not a semi-metric: " +
                            report.violations.front().detail);
  }
  return space;
}

/// A space becomes M_d; a table is taken as it is.
SubMoebiusMap table_of(const Input& in, unsigned jobs) {
  if (in.kind == InputKind::table) {
    return table_from_json(in.json);
  }
  if (in.kind == InputKind::space) {
    return moebius_of(require_valid_space(in), jobs);
  }
  throw InputError(in.path.string() + ": expected a space or a table");
}

GromovProductModel model_of(const Input& in) {
  switch (in.kind) {
    case InputKind::model:
      return model_from_json(in.json);
    case InputKind::tree:
      return build_model(tree_from_json(in.json));
    case InputKind::metric:
      return build_model(metric_source_from_json(in.json));
    default:
      throw InputError(in.path.string() + ": expected a model, tree or metric source");
  }
}

Rational rational_flag(const std::optional<std::string>& text, const char* flag,
                       const Rational& fallback) {
  if (!text) {
    return fallback;
  }
  try {
    return parse_rational(*text);
  } catch (const InputError& e) {
    throw InputError(std::string(flag) + ": " + e.what());
  }
}

ScaleTriple required_scale(const RunConfig& config, const Labels& labels) {
  if (!config.scale) {
    throw InputError("--scale alpha,beta,omega is required");
  }
  return parse_scale_triple(*config.scale, labels);
}

SubMoebiusMap require_axioms(const SubMoebiusMap& map, Outcome& out, unsigned jobs) {
  const auto axioms = check_axioms(map, jobs);
  out.report["axioms"] = to_json(axioms, map.labels());
  if (!axioms.ok()) {
    throw PreconditionError("input is not a sub-Moebius structure (" +
                            std::to_string(axioms.violation_count) + " axiom violations)");
  }
  return map;
}

/// M = symmetrize(perturb(model, eps, seed)) with eps defaulting to 4h.
SubMoebiusMap canonical_structure(const GromovProductModel& model, const RunConfig& config,
                                  Json& report) {
  const Rational eps = rational_flag(config.eps, "--eps", 4 * model.h());
  report["eps"] = to_string(eps);
  report["seed"] = config.seed;
  return symmetrize(perturb(model, eps, config.seed, config.jobs), config.jobs);
}

Outcome cmd_validate(const RunConfig& config) {
  const auto inputs = load_inputs(config, 1, 1);
  const SemiMetricSpace space = require_space(inputs[0]);
  Outcome out{envelope("validate")};
  const auto report = validate_semimetric(space);
  out.report["validation"] = to_json(report, space.labels());
  out.code = report.ok() ? kPass : kCheckFailed;
  return out;
}

Outcome cmd_moebius(const RunConfig& config) {
  const auto inputs = load_inputs(config, 1, 1);
  const SemiMetricSpace space = require_valid_space(inputs[0]);
  Outcome out{envelope("moebius")};
  const SubMoebiusMap m = moebius_of(space, config.jobs);
  const auto axioms = check_axioms(m, config.jobs);
  out.report["axioms"] = to_json(axioms, space.labels());
  out.report["table"] = to_json(m);
  out.code = axioms.ok() ? kPass : kCheckFailed;
  return out;
}

Outcome cmd_submoebius_check(const RunConfig& config) {
  const auto inputs = load_inputs(config, 1, 1);
  const SubMoebiusMap m = table_of(inputs[0], config.jobs);
  Outcome out{envelope("submoebius-check")};
  const auto axioms = check_axioms(m, config.jobs);
  out.report["axioms"] = to_json(axioms, m.labels());
  out.code = axioms.ok() ? kPass : kCheckFailed;
  return out;
}

Outcome cmd_is_moebius(const RunConfig& config) {
  const auto inputs = load_inputs(config, 1, 1);
  Outcome out{envelope("is-moebius")};
  const SubMoebiusMap m = require_axioms(table_of(inputs[0], config.jobs), out, config.jobs);
  const auto verdict = is_moebius(m, config.jobs);
  out.report["moebius"] = to_json(verdict, m.labels());
  out.code = verdict.is_moebius ? kPass : kCheckFailed;
  return out;
}

Outcome cmd_reconstruct(const RunConfig& config) {
  const auto inputs = load_inputs(config, 1, 1);
  Outcome out{envelope("reconstruct")};
  const SubMoebiusMap m = require_axioms(table_of(inputs[0], config.jobs), out, config.jobs);
  const ScaleTriple scale = required_scale(config, m.labels());
  const auto verdict = is_moebius(m, config.jobs);
  if (!verdict.is_moebius) {
    out.report["moebius"] = to_json(verdict, m.labels());
    out.code = kCheckFailed;
    return out;
  }
  out.report = artifact("reconstruct", to_json(scaled_semimetric(m, scale)));
  out.artifact = true;
  return out;
}

Outcome cmd_equivalent(const RunConfig& config) {
  const auto inputs = load_inputs(config, 2, 2);
  const SemiMetricSpace first = require_valid_space(inputs[0]);
  const SemiMetricSpace second = require_valid_space(inputs[1]);
  if (first.labels() != second.labels()) {
    throw PreconditionError("the two spaces must list the same points in the same order");
  }
  Outcome out{envelope("equivalent")};
  const auto result = moebius_equivalent(first, second);
  out.report["equivalence"] = to_json(result, first.labels());
  out.code = result.equivalent ? kPass : kCheckFailed;
  return out;
}

Outcome cmd_hyperbolic(const std::string& sub, const RunConfig& config) {
  const std::string name = "hyperbolic " + sub;
  if (sub == "build") {
    const auto inputs = load_inputs(config, 1, 1);
    return {artifact(name, to_json(model_of(inputs[0]))), kPass, true};
  }
  if (sub == "perturb") {
    const auto inputs = load_inputs(config, 1, 1);
    const GromovProductModel model = model_of(inputs[0]);
    const Rational eps = rational_flag(config.eps, "--eps", 4 * model.h());
    Json body = to_json(perturb(model, eps, config.seed, config.jobs));
    body["eps"] = to_string(eps);
    body["seed"] = config.seed;
    return {artifact(name, body), kPass, true};
  }
  if (sub == "symmetrize") {
    const auto inputs = load_inputs(config, 1, 1);
    if (inputs[0].kind != InputKind::table) {
      throw InputError(inputs[0].path.string() + ": expected a table");
    }
    return {artifact(name, to_json(symmetrize(table_from_json(inputs[0].json), config.jobs))),
            kPass, true};
  }
  if (sub == "deviation") {
    const auto inputs = load_inputs(config, 1, 2);
    const Input* model_input = nullptr;
    const Input* table_input = nullptr;
    for (const auto& in : inputs) {
      (in.kind == InputKind::table ? table_input : model_input) = &in;
    }
    if (model_input == nullptr) {
      throw InputError("--input: deviation needs a model, tree or metric source");
    }
    const GromovProductModel model = model_of(*model_input);
    Outcome out{envelope(name)};
    const SubMoebiusMap m = table_input != nullptr
                                ? table_from_json(table_input->json)
                                : canonical_structure(model, config, out.report);
    const Rational h = rational_flag(config.h, "--h", model.h());
    const auto report = deviation_check(m, basepoint_moebius(model, config.jobs), h, config.jobs);
    out.report["deviation"] = to_json(report, model.boundary());
    out.code = report.within_10h() ? kPass : kCheckFailed;
    return out;
  }
  throw InputError("unknown hyperbolic subcommand '" + sub + "'");
}

Outcome cmd_topology(const std::string& sub, const RunConfig& config) {
  const std::string name = "topology " + sub;
  const auto inputs = load_inputs(config, 1, 1);
  Outcome out{envelope(name)};
  if (sub == "sandwich") {
    const GromovProductModel model = model_of(inputs[0]);
    std::optional<ScaleTriple> only;
    if (config.scale) {
      only = parse_scale_triple(*config.scale, model.boundary());
    }
    const SubMoebiusMap m = canonical_structure(model, config, out.report);
    out.report["h"] = to_string(model.h());
    const auto standard = sandwich_scan(model, nullptr, SandwichVariant::standard, config.jobs, only);
    const auto sub_report = sandwich_scan(model, &m, SandwichVariant::submoebius, config.jobs, only);
    const auto identity = complement_identity_scan(m, config.jobs, only);
    out.report["standard"] = to_json(standard, model.boundary());
    out.report["submoebius"] = to_json(sub_report, model.boundary());
    out.report["complement_identity"] = to_json(identity, model.boundary());
    out.code = standard.ok() && sub_report.ok() && identity.ok() ? kPass : kCheckFailed;
    return out;
  }
  if (sub == "compare") {
    const SemiMetricSpace space = require_valid_space(inputs[0]);
    const SubMoebiusMap m = moebius_of(space, config.jobs);
    const bool same =
        same_topology(space.size(), semimetric_subbase(space), moebius_subbase(m, config.jobs));
    const auto balls = ball_families_agree(m, config.jobs);
    out.report["same_topology"] = same;
    out.report["ball_families"] = to_json(balls, space.labels());
    out.code = same && balls.ok() ? kPass : kCheckFailed;
    return out;
  }
  throw InputError("unknown topology subcommand '" + sub + "'");
}

Outcome dispatch(const RunConfig& config) {
  if (config.command.empty()) {
    throw InputError("no subcommand given");
  }
  const std::string& head = config.command[0];
  const std::string sub = config.command.size() > 1 ? config.command[1] : "";
  if (head == "validate") {
    return cmd_validate(config);
  }
  if (head == "moebius") {
    return cmd_moebius(config);
  }
  if (head == "submoebius-check") {
    return cmd_submoebius_check(config);
  }
  if (head == "is-moebius") {
    return cmd_is_moebius(config);
  }
  if (head == "reconstruct") {
    return cmd_reconstruct(config);
  }
  if (head == "equivalent") {
    return cmd_equivalent(config);
  }
  if (head == "hyperbolic") {
    return cmd_hyperbolic(sub, config);
  }
  if (head == "topology") {
    return cmd_topology(sub, config);
  }
  if (head == "demo") {
    bool ok = true;
    Json report = run_demo(config.jobs, ok);
    return {std::move(report), ok ? kPass : kCheckFailed};
  }
  throw InputError("unknown subcommand '" + head + "'");
}

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":";
      if (value.contains("ok")) {
        os << (value["ok"].get<bool>() ? " PASS" : " FAIL");
      }
      os << "\n";
      render_text(os, value, indent + 1);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      os << pad << key << ": " << value.size() << " item(s)\n";
      for (const auto& item : value) {
        os << pad << "  - " << item.dump() << "\n";
      }
    } else if (value.is_string()) {
      os << pad << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << pad << key << ": " << value.dump() << "\n";
    }
  }
}

void render_demo_text(std::ostream& os, const Json& report) {
  for (const auto& suite : report["suites"]) {
    os << suite["name"].get<std::string>() << ": " << (suite["ok"].get<bool>() ? "PASS" : "FAIL")
       << "\n";
    for (const auto& [check, passed] : suite["checks"].items()) {
      os << "  " << (passed.get<bool>() ? "pass " : "FAIL ") << check << "\n";
    }
  }
  os << "demo: " << (report["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

int fail(std::ostream& out, std::ostream& err, const RunConfig& config, int code,
         const std::string& kind, const std::string& message) {
  err << "error: " << message << "\n";
  if (config.format == Format::json) {
    Json report;
    report["schema_version"] = kSchemaVersion;
    report["error"] = {{"kind", kind}, {"exit_code", code}, {"message", message}};
    out << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Outcome outcome = dispatch(config);
    if (config.format == Format::json || outcome.artifact) {
      out << outcome.report.dump(2) << "\n";
    } else if (!config.command.empty() && config.command[0] == "demo") {
      render_demo_text(out, outcome.report);
    } else {
      render_text(out, outcome.report, 0);
      out << (outcome.code == kPass ? "result: PASS" : "result: FAIL") << "\n";
    }
    return outcome.code;
  } catch (const NotMoebiusError& e) {
    return fail(out, err, config, kCheckFailed, "check_failed", e.what());
  } catch (const InputError& e) {
    return fail(out, err, config, kMalformedInput, "malformed_input", e.what());
  } catch (const Json::exception& e) {
    return fail(out, err, config, kMalformedInput, "malformed_input", e.what());
  } catch (const Error& e) {
    return fail(out, err, config, kPrecondition, "precondition", e.what());
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Moebius and sub-Moebius structures on finite point sets", "moebius"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::vector<std::string> inputs;
  std::string format = "text";
  app.add_option("--input,--model", inputs, "Input JSON file (repeatable)");
  app.add_option("--scale", config.scale, "Scale triple alpha,beta,omega");
  app.add_option("--eps", config.eps, "Perturbation size (rational; default 4h)");
  app.add_option("--seed", config.seed, "Perturbation seed");
  app.add_option("--h", config.h, "Hyperbolicity constant override (rational)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1U, 256U));

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "Check the semi-metric axioms of a space"},
      {"moebius", "Print the cross-ratio table M_d of a space"},
      {"submoebius-check", "Check equivariance and degenerate values of a table"},
      {"is-moebius", "Check conditions (A) and (B) on every scale triple"},
      {"reconstruct", "Rebuild the semi-metric of a table in the chart --scale"},
      {"equivalent", "Compare the cross-ratio tables of two spaces"},
      {"demo", "Run the built-in examples"}};
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help);
  }
  app.get_subcommand("is-moebius")->alias("moebius-check");
  auto* hyperbolic = app.add_subcommand("hyperbolic", "Boundary models");
  hyperbolic->require_subcommand(1);
  const std::pair<const char*, const char*> hyperbolic_commands[] = {
      {"build", "Gromov products of a tree or metric source"},
      {"perturb", "M_o with seeded noise of size --eps on each cross-difference"},
      {"symmetrize", "Average a log-backed table over S4"},
      {"deviation", "Largest distance between a table and M_o"}};
  for (const auto& [name, help] : hyperbolic_commands) {
    hyperbolic->add_subcommand(name, help)->fallthrough();
  }
  auto* topology = app.add_subcommand("topology", "Subbase checks");
  topology->require_subcommand(1);
  topology->add_subcommand("sandwich", "Check the ball sandwiches on a model")->fallthrough();
  topology->add_subcommand("compare", "Compare the topologies of a space and its table")
      ->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }

  for (const auto* sub = app.get_subcommands().front(); sub != nullptr;) {
    config.command.push_back(sub->get_name());
    const auto children = sub->get_subcommands();
    sub = children.empty() ? nullptr : children.front();
  }
  config.inputs.assign(inputs.begin(), inputs.end());
  config.format = format == "json" ? Format::json : Format::text;
  return run(config, out, err);
}

}  // namespace moebius::cli
