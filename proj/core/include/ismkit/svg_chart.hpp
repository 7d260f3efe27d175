#pragma once

#include <string>

#include "ismkit/micmac.hpp"

namespace ismkit {

// Scatter chart of the four-quadrant analysis: dependence power on the
// x axis, driving power on the y axis, dashed cutoff lines, one labelled
// dot per distinct (dependence, driving) position. Pure string output,
// deterministic for identical inputs.
std::string micmac_svg(const QuadrantChart& chart);

} // namespace ismkit
