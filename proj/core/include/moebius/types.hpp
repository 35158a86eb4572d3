#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace moebius {

/// Index of a point in a finite domain (0-based, in declaration order).
using PointId = std::uint32_t;

using Tuple4 = std::array<PointId, 4>;
using Tuple5 = std::array<PointId, 5>;

/// Point labels as given in input files; index = PointId.
using Labels = std::vector<std::string>;

}  // namespace moebius
