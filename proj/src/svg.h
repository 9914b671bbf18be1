#pragma once

#include <string>

#include "layouts.h"

namespace gridsat {

/// Bar layout as SVG, 20 px per grid unit: light edge bars under dark vertex
/// bars, one rect each, with optional grid lines.
std::string layout2dToSvg(const Layout2D& layout, bool gridLines = false);

/// Two-dimensional box layout as SVG, one translucent rect per box.
std::string boxLayoutToSvg(const BoxLayout& layout, bool gridLines = false);

}  // namespace gridsat
