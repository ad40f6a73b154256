#pragma once

#include <string>
#include <vector>

#include "nodal_theta/complex_pair.hpp"
#include "nodal_theta/curve.hpp"

namespace nodal_theta::cli {

struct Marker {
  Complex z;
  std::string kind;  // "zero", "p1", "p2"
};

/// Standalone SVG 1.1: heat map of values[j][i] over the (s, t) grid of the
/// parallelogram, with markers. Values are mapped linearly between their
/// extremes.
std::string heatmap_svg(const NodalCurveSpec& spec,
                        const std::vector<std::vector<double>>& values,
                        const std::vector<Marker>& markers, const std::string& title);

}  // namespace nodal_theta::cli
