#pragma once

#include <string>

#include "shapekit/shape.hpp"

namespace shapekit {

// "cell,vertex_index,w1,w2" rows, exact vertices of each cell clipped to [0, W]^2
std::string region_csv(const Region& r, const Rational& viewport);

// 440x440, 2D cells as filled paths, 1D cells stroked, dashed fundamental-domain lines
std::string region_svg(const Region& r, const Rational& viewport);

}  // namespace shapekit
