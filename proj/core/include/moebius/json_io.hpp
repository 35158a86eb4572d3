#pragma once

// JSON encodings of inputs, artifacts and reports. Extended rationals are
// strings ("p/q", "inf", "-inf"); numbers are accepted on input. Point ids
// may be strings or integers and are kept as strings.

#include <filesystem>

#include <nlohmann/json.hpp>

#include "moebius/cross_ratio.hpp"
#include "moebius/hyperbolic.hpp"
#include "moebius/reconstruction.hpp"
#include "moebius/semimetric.hpp"
#include "moebius/topology.hpp"

namespace moebius {

using Json = nlohmann::ordered_json;

/// Reads and parses a file; throws InputError naming the path on failure.
Json load_json_file(const std::filesystem::path& path);

/// {"points": [ids], "omega": id or null, "matrix": [[values]], "scale"?: "mul" | "log"}
SemiMetricSpace space_from_json(const Json& j);
Json to_json(const SemiMetricSpace& space);

/// Either {"points", "scale"?, "entries": [{"tuple", "value"}]} or a bare
/// list of entries (points in order of first appearance, multiplicative).
SubMoebiusMap table_from_json(const Json& j);
Json to_json(const SubMoebiusMap& map);

/// {"boundary": [ids], "gp": [[values]]}; "h" is ignored on input.
GromovProductModel model_from_json(const Json& j);
Json to_json(const GromovProductModel& model);

/// {"edges": [[parent, child, length]], "root": id}
TreeSource tree_from_json(const Json& j);
/// {"points": [ids], "matrix": [[values]], "basepoint": id}
MetricSource metric_source_from_json(const Json& j);

/// "alpha,beta,omega" resolved against the labels.
ScaleTriple parse_scale_triple(const std::string& text, const Labels& labels);

Json tuple_json(const Labels& labels, std::span<const PointId> tuple);
Json triple_json(const Triple& triple);
Json point_set_json(PointSet set, const Labels& labels);

Json to_json(const ValidationReport& report, const Labels& labels);
Json to_json(const AxiomReport& report, const Labels& labels);
Json to_json(const MoebiusVerdict& verdict, const Labels& labels);
Json to_json(const EquivalenceResult& result, const Labels& labels);
Json to_json(const DeviationReport& report, const Labels& labels);
Json to_json(const SandwichReport& report, const Labels& labels);
Json to_json(const IdentityReport& report, const Labels& labels);
Json to_json(const BallAgreementReport& report, const Labels& labels);

}  // namespace moebius
