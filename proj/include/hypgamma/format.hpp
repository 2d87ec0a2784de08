#pragma once

#include <string>

#include "hypgamma/real.hpp"

namespace hypgamma {

/// Render with `digits` significant digits: fixed-point notation for
/// magnitudes in [1e-4, 10^digits), scientific below/above (the small
/// rising-weight constants span six orders of magnitude).
std::string format_value(const PrecReal& v, int digits);

}  // namespace hypgamma
