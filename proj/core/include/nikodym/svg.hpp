#pragma once

#include <string>

#include "nikodym/construction.hpp"

namespace nikodym {

/// Side length of the SVG viewBox in user units.
inline constexpr int kSvgSize = 1000;

/// Decimal places used for every SVG coordinate.
inline constexpr int kSvgPlaces = 9;

/// Renders the unit square, every Q member (class "q"), every R member
/// (class "r") and the swept left-edge cover (class "cover"). The y axis is
/// flipped so that y = 0 is at the bottom. Emits exactly n² - n <polygon>
/// elements.
std::string render_svg(const Family& f);

}  // namespace nikodym
