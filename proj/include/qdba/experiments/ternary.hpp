#pragma once

#include <vector>

#include "qdba/quantum/channel.hpp"

namespace qdba::experiments {

/// Points (a, b, c) * total / resolution with a + b + c = resolution, in
/// lexicographic order of (a, b). p0 = 1 - total for every point.
std::vector<quantum::PauliParams> ternary_grid(double total, int resolution);

}  // namespace qdba::experiments
