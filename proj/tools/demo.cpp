#include "demo.hpp"

#include <cstdlib>

namespace moebius::cli {

namespace {

Labels labels_of(std::initializer_list<const char*> ids) { return Labels(ids.begin(), ids.end()); }

struct Suite {
  Json json;
  bool ok = true;

  explicit Suite(const std::string& name) { json["name"] = name; }

  void check(const std::string& name, bool passed) {
    json["checks"][name] = passed;
    ok = ok && passed;
  }
  Json finish() {
    json["ok"] = ok;
    return json;
  }
};

void moebius_suite(Suite& s, const SemiMetricSpace& space, const ScaleTriple& scale,
                   unsigned jobs) {
  const auto validation = validate_semimetric(space);
  s.check("semimetric_valid", validation.ok());
  const SubMoebiusMap m = moebius_of(space, jobs);
  const auto axioms = check_axioms(m, jobs);
  s.check("axioms", axioms.ok());
  s.json["axioms"] = to_json(axioms, space.labels());
  const auto verdict = is_moebius(m, jobs);
  s.check("is_moebius", verdict.is_moebius);
  s.json["moebius"] = to_json(verdict, space.labels());
  const SemiMetricSpace d = reconstruct_semimetric(m, scale, jobs);
  s.check("reconstruction_valid", validate_semimetric(d).ok());
  s.check("reconstruction_unit", d.dist(scale.alpha, scale.beta).is_one());
  s.check("reconstruction_equivalent", moebius_equivalent(d, space).equivalent);
  s.json["reconstructed"] = to_json(d);
  const auto balls = ball_families_agree(m, jobs);
  s.check("ball_families_agree", balls.ok());
  s.check("same_topology",
          same_topology(space.size(), semimetric_subbase(space), moebius_subbase(m, jobs)));
  if (space.omega() && space.omega() == scale.omega) {
    s.check("roundtrip_exact", d == space);
  }
}

void hyperbolic_suite(Suite& s, const GromovProductModel& model, const SubMoebiusMap& m,
                      const SubMoebiusMap& m_o, unsigned jobs) {
  const auto& labels = model.boundary();
  const auto axioms = check_axioms(m, jobs);
  s.check("axioms", axioms.ok());
  s.json["axioms"] = to_json(axioms, labels);
  const auto deviation = deviation_check(m, m_o, model.h(), jobs);
  s.check("deviation_within_sqrt96_h", deviation.within_sqrt96());
  s.json["deviation"] = to_json(deviation, labels);
  const auto standard = sandwich_scan(model, nullptr, SandwichVariant::standard, jobs);
  s.check("sandwich_standard", standard.ok());
  s.json["sandwich_standard"] = to_json(standard, labels);
  const auto sub = sandwich_scan(model, &m, SandwichVariant::submoebius, jobs);
  s.check("sandwich_submoebius", sub.ok());
  s.json["sandwich_submoebius"] = to_json(sub, labels);
  const auto identity = complement_identity_scan(m, jobs);
  s.check("complement_identity", identity.ok());
  s.json["complement_identity"] = to_json(identity, labels);
}

}  // namespace

SemiMetricSpace demo_line_space() {
  const long xs[] = {0, 1, 3, 7};
  return SemiMetricSpace::from_function(
      labels_of({"0", "1", "3", "7"}), std::nullopt, Scale::multiplicative,
      [&](PointId i, PointId j) { return Magnitude::from_rational(std::labs(xs[i] - xs[j])); });
}

SemiMetricSpace demo_normalized_line_space() {
  const long xs[] = {0, 1, 3, 7};
  return SemiMetricSpace::from_function(
      labels_of({"0", "1", "3", "7", "w"}), PointId{4}, Scale::multiplicative,
      [&](PointId i, PointId j) {
        if (i == 4 || j == 4) {
          return Magnitude::infinity(Scale::multiplicative);
        }
        return Magnitude::from_rational(std::labs(xs[i] - xs[j]));
      });
}

TreeSource demo_tree() {
  // Balanced binary tree of depth 3 with unit edges; leaves l0..l7.
  TreeSource tree;
  tree.root = "r";
  const char* level1[] = {"a0", "a1"};
  const char* level2[] = {"b0", "b1", "b2", "b3"};
  for (int i = 0; i < 2; ++i) {
    tree.edges.push_back({"r", level1[i], 1});
  }
  for (int i = 0; i < 4; ++i) {
    tree.edges.push_back({level1[i / 2], level2[i], 1});
  }
  for (int i = 0; i < 8; ++i) {
    tree.edges.push_back({level2[i / 2], "l" + std::to_string(i), 1});
  }
  return tree;
}

MetricSource demo_cycle_metric() {
  // Graph metric of the 6-cycle, basepoint 0: five boundary points, h = 1.
  MetricSource source;
  for (int i = 0; i < 6; ++i) {
    source.points.push_back(std::to_string(i));
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const int k = std::abs(i - j);
      source.dist.emplace_back(std::min(k, 6 - k));
    }
  }
  source.basepoint = "0";
  return source;
}

Json run_demo(unsigned jobs, bool& ok) {
  Json suites = Json::array();
  ok = true;
  auto add = [&](Suite& s) {
    ok = ok && s.ok;
    suites.push_back(s.finish());
  };

  {
    Suite s("line");
    moebius_suite(s, demo_line_space(), ScaleTriple::make(0, 1, 3), jobs);
    add(s);
  }
  {
    Suite s("normalized_line");
    moebius_suite(s, demo_normalized_line_space(), ScaleTriple::make(0, 1, 4), jobs);
    add(s);
  }
  {
    Suite s("tree");
    const TreeSource tree = demo_tree();
    const GromovProductModel model = build_model(tree);
    s.json["model"] = to_json(model);
    s.check("h_zero", model.h() == 0);
    const SubMoebiusMap m_o = basepoint_moebius(model, jobs);
    s.check("basepoint_is_moebius", is_moebius(m_o, jobs).is_moebius);
    const SubMoebiusMap m = symmetrize(m_o, jobs);
    s.check("symmetrize_fixes_m_o", m == m_o);
    const GromovProductModel rerooted = build_model(reroot(tree, "a0"));
    s.check("reroot_equivalent", moebius_equivalent(basepoint_semimetric(model),
                                                    basepoint_semimetric(rerooted))
                                     .equivalent);
    hyperbolic_suite(s, model, m, m_o, jobs);
    add(s);
  }
  {
    Suite s("perturbed_cycle");
    const GromovProductModel model = build_model(demo_cycle_metric());
    s.json["model"] = to_json(model);
    const Rational eps = 4 * model.h();
    s.json["eps"] = to_string(eps);
    s.json["seed"] = kDemoSeed;
    const SubMoebiusMap m_o = basepoint_moebius(model, jobs);
    const SubMoebiusMap m = symmetrize(perturb(model, eps, kDemoSeed, jobs), jobs);
    const auto verdict = is_moebius(m, jobs);
    s.check("not_moebius_detected", !verdict.is_moebius);
    s.json["moebius"] = to_json(verdict, model.boundary());
    hyperbolic_suite(s, model, m, m_o, jobs);
    add(s);
  }

  Json out;
  out["schema_version"] = 1;
  out["command"] = "demo";
  out["ok"] = ok;
  out["suites"] = std::move(suites);
  return out;
}

}  // namespace moebius::cli
