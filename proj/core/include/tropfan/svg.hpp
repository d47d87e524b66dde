#pragma once

#include "tropfan/fan.hpp"

#include <string>

namespace tropfan {

/// A 2-D fan on a fixed 240x240 viewport: every ray drawn to unit length from
/// the origin, labelled with its direction and (if not 1) its weight.
/// Throws Unsupported when the ambient dimension is not 2.
std::string render_svg(const WeightedFan& x);

}  // namespace tropfan
