#include "moebius/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "moebius/errors.hpp"

namespace moebius {

namespace {

std::string label_of(const Json& j, const std::string& where) {
  if (j.is_string()) {
    return j.get<std::string>();
  }
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return j.dump();
  }
  throw InputError(where + ": point ids must be strings or integers");
}

std::string value_text(const Json& j, const std::string& where) {
  if (j.is_string()) {
    return j.get<std::string>();
  }
  if (j.is_number()) {
    return j.dump();
  }
  throw InputError(where + ": expected a rational string or a number");
}

template <typename T, typename Parse>
T parse_at(const Json& j, const std::string& where, Parse&& parse) {
  try {
    return parse(value_text(j, where));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* name, const std::string& context) {
  if (!j.is_object() || !j.contains(name)) {
    throw InputError(context + ": missing field '" + name + "'");
  }
  return j.at(name);
}

Labels labels_from(const Json& j, const std::string& where) {
  if (!j.is_array()) {
    throw InputError(where + ": expected an array of point ids");
  }
  Labels out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(label_of(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

PointId index_in(const Labels& labels, const std::string& label, const std::string& where) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw InputError(where + ": unknown point '" + label + "'");
  }
  return static_cast<PointId>(it - labels.begin());
}

template <typename Cell>
std::vector<Cell> square_matrix(const Json& j, std::size_t n, const std::string& where,
                                const std::function<Cell(const std::string&)>& parse) {
  if (!j.is_array() || j.size() != n) {
    throw InputError(where + ": expected " + std::to_string(n) + " rows");
  }
  std::vector<Cell> out;
  out.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != n) {
      throw InputError(row_where + ": expected " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      out.push_back(parse_at<Cell>(j[r][c], row_where + "[" + std::to_string(c) + "]", parse));
    }
  }
  return out;
}

Scale scale_field(const Json& j, const std::string& context) {
  if (j.is_object() && j.contains("scale")) {
    const Json& s = j.at("scale");
    if (!s.is_string()) {
      throw InputError(context + ".scale: expected \"mul\" or \"log\"");
    }
    return parse_scale(s.get<std::string>());
  }
  return Scale::multiplicative;
}

Json scale_json(const ScaleTriple& s, const Labels& labels) {
  return Json::array({labels[s.alpha], labels[s.beta], labels[s.omega]});
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

SemiMetricSpace space_from_json(const Json& j) {
  const Labels labels = labels_from(field(j, "points", "space"), "points");
  const Scale scale = scale_field(j, "space");
  auto matrix = square_matrix<Magnitude>(field(j, "matrix", "space"), labels.size(), "matrix",
                                         [scale](const std::string& t) {
                                           return Magnitude::parse(t, scale);
                                         });
  std::optional<PointId> omega;
  if (j.contains("omega") && !j.at("omega").is_null()) {
    omega = index_in(labels, label_of(j.at("omega"), "omega"), "omega");
  }
  return SemiMetricSpace(labels, std::move(matrix), omega, scale);
}

Json to_json(const SemiMetricSpace& space) {
  Json out;
  out["points"] = space.labels();
  out["omega"] = space.omega() ? Json(space.label(*space.omega())) : Json(nullptr);
  out["scale"] = std::string(to_string(space.scale()));
  Json rows = Json::array();
  for (PointId i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (PointId k = 0; k < space.size(); ++k) {
      row.push_back(space.dist(i, k).to_string());
    }
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  return out;
}

SubMoebiusMap table_from_json(const Json& j) {
  const Json* entries = nullptr;
  Labels labels;
  Scale scale = Scale::multiplicative;
  if (j.is_array()) {
    entries = &j;
    for (std::size_t e = 0; e < j.size(); ++e) {
      const std::string where = "entries[" + std::to_string(e) + "].tuple";
      const Json& tuple = field(j[e], "tuple", "entries[" + std::to_string(e) + "]");
      for (const auto& id : labels_from(tuple, where)) {
        if (std::find(labels.begin(), labels.end(), id) == labels.end()) {
          labels.push_back(id);
        }
      }
    }
  } else {
    labels = labels_from(field(j, "points", "table"), "points");
    scale = scale_field(j, "table");
    entries = &field(j, "entries", "table");
    if (!entries->is_array()) {
      throw InputError("entries: expected an array");
    }
  }
  SubMoebiusMap map(labels, scale);
  for (std::size_t e = 0; e < entries->size(); ++e) {
    const std::string where = "entries[" + std::to_string(e) + "]";
    const Json& entry = (*entries)[e];
    const Labels ids = labels_from(field(entry, "tuple", where), where + ".tuple");
    if (ids.size() != 4) {
      throw InputError(where + ".tuple: expected 4 points");
    }
    Tuple4 t{};
    for (std::size_t k = 0; k < 4; ++k) {
      t[k] = index_in(labels, ids[k], where + ".tuple");
    }
    const Json& value = field(entry, "value", where);
    if (!value.is_array() || value.size() != 3) {
      throw InputError(where + ".value: expected 3 values");
    }
    Triple triple;
    for (std::size_t k = 0; k < 3; ++k) {
      triple[k] = parse_at<Magnitude>(value[k], where + ".value[" + std::to_string(k) + "]",
                                      [scale](const std::string& s) {
                                        return Magnitude::parse(s, scale);
                                      });
    }
    if (!is_admissible(t)) {
      throw InputError(where + ".tuple: not admissible");
    }
    if (map.entry(t)) {
      throw InputError(where + ".tuple: duplicate entry");
    }
    map.set(t, std::move(triple));
  }
  return map;
}

Json to_json(const SubMoebiusMap& map) {
  Json out;
  out["points"] = map.labels();
  out["scale"] = std::string(to_string(map.scale()));
  Json entries = Json::array();
  for (const auto& t : map.admissible_tuples()) {
    if (const auto& v = map.entry(t)) {
      entries.push_back({{"tuple", tuple_json(map.labels(), t)}, {"value", triple_json(*v)}});
    }
  }
  out["entries"] = std::move(entries);
  return out;
}

GromovProductModel model_from_json(const Json& j) {
  const Labels labels = labels_from(field(j, "boundary", "model"), "boundary");
  auto gp = square_matrix<ExtReal>(field(j, "gp", "model"), labels.size(), "gp",
                                   [](const std::string& t) { return ExtReal::parse(t); });
  return GromovProductModel(labels, std::move(gp));
}

Json to_json(const GromovProductModel& model) {
  Json out;
  out["boundary"] = model.boundary();
  Json rows = Json::array();
  for (PointId i = 0; i < model.size(); ++i) {
    Json row = Json::array();
    for (PointId k = 0; k < model.size(); ++k) {
      row.push_back(model.gp(i, k).to_string());
    }
    rows.push_back(std::move(row));
  }
  out["gp"] = std::move(rows);
  out["h"] = to_string(model.h());
  return out;
}

TreeSource tree_from_json(const Json& j) {
  TreeSource tree;
  tree.root = label_of(field(j, "root", "tree"), "root");
  const Json& edges = field(j, "edges", "tree");
  if (!edges.is_array()) {
    throw InputError("edges: expected an array");
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    const Json& edge = edges[e];
    if (!edge.is_array() || edge.size() != 3) {
      throw InputError(where + ": expected [parent, child, length]");
    }
    tree.edges.push_back({label_of(edge[0], where + "[0]"), label_of(edge[1], where + "[1]"),
                          parse_at<Rational>(edge[2], where + "[2]", [](const std::string& s) {
                            return parse_rational(s);
                          })});
  }
  return tree;
}

MetricSource metric_source_from_json(const Json& j) {
  MetricSource source;
  source.points = labels_from(field(j, "points", "metric"), "points");
  source.dist = square_matrix<Rational>(field(j, "matrix", "metric"), source.points.size(),
                                        "matrix",
                                        [](const std::string& s) { return parse_rational(s); });
  source.basepoint = label_of(field(j, "basepoint", "metric"), "basepoint");
  return source;
}

ScaleTriple parse_scale_triple(const std::string& text, const Labels& labels) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    parts.push_back(part);
  }
  if (parts.size() != 3) {
    throw InputError("--scale: expected alpha,beta,omega");
  }
  PointId ids[3];
  for (std::size_t k = 0; k < 3; ++k) {
    ids[k] = index_in(labels, parts[k], "--scale");
  }
  try {
    return ScaleTriple::make(ids[0], ids[1], ids[2]);
  } catch (const PreconditionError&) {
    throw InputError("--scale: the three points must be distinct");
  }
}

Json tuple_json(const Labels& labels, std::span<const PointId> tuple) {
  Json out = Json::array();
  for (auto p : tuple) {
    out.push_back(labels.at(p));
  }
  return out;
}

Json triple_json(const Triple& triple) {
  return Json::array({triple[0].to_string(), triple[1].to_string(), triple[2].to_string()});
}

Json point_set_json(PointSet set, const Labels& labels) {
  Json out = Json::array();
  for (auto p : members(set)) {
    out.push_back(labels.at(p));
  }
  return out;
}

Json to_json(const ValidationReport& report, const Labels& labels) {
  Json list = Json::array();
  for (const auto& v : report.violations) {
    list.push_back({{"kind", v.kind}, {"where", tuple_json(labels, v.where)}, {"detail", v.detail}});
  }
  return {{"ok", report.ok()}, {"violations", std::move(list)}};
}

Json to_json(const AxiomReport& report, const Labels& labels) {
  Json list = Json::array();
  for (const auto& v : report.violations) {
    Json item{{"axiom", v.axiom}, {"tuple", tuple_json(labels, v.tuple)}};
    if (v.perm) {
      item["perm"] = v.perm->to_string();
    }
    if (v.expected) {
      item["expected"] = triple_json(*v.expected);
    }
    if (v.actual) {
      item["actual"] = triple_json(*v.actual);
    }
    item["detail"] = v.detail;
    list.push_back(std::move(item));
  }
  return {{"ok", report.ok()},
          {"checked_tuples", report.checked_tuples},
          {"violation_count", report.violation_count},
          {"violations", std::move(list)}};
}

Json to_json(const MoebiusVerdict& verdict, const Labels& labels) {
  Json out{{"is_moebius", verdict.is_moebius}, {"checked_tuples", verdict.checked_tuples}};
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    auto side = [](const std::optional<Magnitude>& m) {
      return m ? Json(m->to_string()) : Json("undefined");
    };
    out["witness"] = {{"scale", scale_json(w.scale, labels)},
                      {"tuple", tuple_json(labels, w.tuple)},
                      {"condition", std::string(1, w.condition)},
                      {"lhs", side(w.lhs)},
                      {"rhs", side(w.rhs)}};
  }
  return out;
}

Json to_json(const EquivalenceResult& result, const Labels& labels) {
  Json out{{"equivalent", result.equivalent}};
  if (result.witness) {
    out["witness"] = tuple_json(labels, *result.witness);
    out["first_value"] = triple_json(*result.first_value);
    out["second_value"] = triple_json(*result.second_value);
  }
  return out;
}

Json to_json(const DeviationReport& report, const Labels& labels) {
  Json out{{"h", to_string(report.h)},
           {"compared_tuples", report.compared},
           {"max_norm_squared", to_string(report.max_norm_squared)},
           {"max_norm", report.max_norm},
           {"bound_96h2", to_string(Rational(96 * report.h * report.h))},
           {"within_sqrt96_h", report.within_sqrt96()},
           {"within_10h", report.within_10h()}};
  if (report.worst) {
    out["worst_tuple"] = tuple_json(labels, *report.worst);
  }
  return out;
}

Json to_json(const SandwichReport& report, const Labels& labels) {
  Json list = Json::array();
  for (const auto& c : report.failures) {
    Json item{{"variant", std::string(to_string(c.variant))},
              {"scale", scale_json(c.scale, labels)},
              {"y", labels.at(c.y)}};
    if (c.side) {
      item["side"] = *c.side == Side::alpha ? "alpha" : "beta";
    }
    item["level"] = to_string(c.level);
    item["inner"] = point_set_json(c.inner, labels);
    item["middle"] = point_set_json(c.middle, labels);
    item["outer"] = point_set_json(c.outer, labels);
    item["inner_ok"] = c.inner_ok;
    item["outer_ok"] = c.outer_ok;
    list.push_back(std::move(item));
  }
  return {{"ok", report.ok()},
          {"checked", report.checked},
          {"skipped", report.skipped},
          {"failed", report.failed},
          {"failures", std::move(list)}};
}

Json to_json(const IdentityReport& report, const Labels& labels) {
  Json list = Json::array();
  for (const auto& c : report.failures) {
    list.push_back({{"scale", scale_json(c.scale, labels)},
                    {"y", labels.at(c.y)},
                    {"side", c.side == Side::alpha ? "alpha" : "beta"},
                    {"t", c.t.to_string()},
                    {"complement", point_set_json(c.complement, labels)},
                    {"ball", point_set_json(c.ball, labels)}});
  }
  return {{"ok", report.ok()},
          {"checked", report.checked},
          {"failed", report.failed},
          {"failures", std::move(list)}};
}

Json to_json(const BallAgreementReport& report, const Labels& labels) {
  Json out{{"ok", report.ok()}, {"checked", report.checked}, {"failed", report.failed}};
  if (report.scale) {
    Json first{{"scale", scale_json(*report.scale, labels)},
               {"y", labels.at(*report.y)},
               {"t", report.t->to_string()},
               {"metric_ball", point_set_json(*report.metric_ball, labels)}};
    if (report.alpha_ball) {
      first["alpha_ball"] = point_set_json(*report.alpha_ball, labels);
    }
    if (report.beta_ball) {
      first["beta_ball"] = point_set_json(*report.beta_ball, labels);
    }
    out["first_failure"] = std::move(first);
  }
  return out;
}

}  // namespace moebius
