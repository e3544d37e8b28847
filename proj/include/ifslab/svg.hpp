#pragma once

#include <cstddef>
#include <string>

#include "ifslab/geometry.hpp"

namespace ifslab {

struct SvgStyle {
    double width = 900.0;
    double height = 900.0;
    double margin = 60.0;
    double point_radius = 1.6;
    bool legend = true;
};

/// Deterministic SVG rendering: per-label coloring with a fixed palette,
/// an axis box annotated with the data bounds, and a legend. Identical input
/// yields identical bytes.
std::string render_svg(const PointCloud& cloud, const SvgStyle& style = {});

}  // namespace ifslab
