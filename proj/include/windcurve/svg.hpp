#pragma once

#include "windcurve/curve.hpp"

#include <string>

namespace windcurve {

// Static SVG 1.1 figure: the curve, its polar rescaled to the same radial
// extent, and the kernel shaded.
std::string figure_svg(const WoundPolygon& c, int size_px = 640);

void write_figure(const std::string& path, const WoundPolygon& c, int size_px = 640);

}  // namespace windcurve
