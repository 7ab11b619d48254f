#pragma once

/// Static SVG scatter of points on the p x p grid of F_p^2.

#include <string>
#include <vector>

#include "neuberg/plane.hpp"

namespace neuberg {

struct PlotLabel {
  Pt point;
  std::string text;
};

/// x grows to the right and y upward; every grid point is drawn faintly and
/// each of `points` as a filled dot. Labels are placed next to their point.
std::string scatter_svg(std::uint64_t p, const std::vector<Pt>& points, const std::vector<PlotLabel>& labels,
                        const std::string& title);

}  // namespace neuberg
