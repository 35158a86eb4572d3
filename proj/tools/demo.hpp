#pragma once

#include "moebius/json_io.hpp"

namespace moebius::cli {

/// The built-in line, normalized line, tree and perturbed-cycle pipelines.
/// Sets `ok` to whether every suite passed.
Json run_demo(unsigned jobs, bool& ok);

// Built-in inputs, shared with the tests.
SemiMetricSpace demo_line_space();
SemiMetricSpace demo_normalized_line_space();
TreeSource demo_tree();
MetricSource demo_cycle_metric();
inline constexpr std::uint64_t kDemoSeed = 1;

}  // namespace moebius::cli
