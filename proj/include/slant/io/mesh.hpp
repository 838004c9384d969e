#pragma once

#include <cstddef>
#include <string>

#include "slant/surface.hpp"

namespace slant::io {

/// Wavefront OBJ text for r(u, v) = f(u) + v q(u) on `columns` equally spaced
/// u values over the surface range and `rows` v values over [v_min, v_max].
///
/// Vertices are emitted u-major ("v x y z"), then each quad is split into two
/// triangles with 1-based indices. Winding is counterclockwise seen from the
/// side the asymptotic normal a points to on the v > 0 half of the strip
/// (face normal along ∂r/∂v × ∂r/∂u). Throws BadParams for fewer than two
/// columns or rows, or v_min ≥ v_max.
std::string export_obj(const RuledSurfaceSpec& surface, std::size_t columns, double v_min, double v_max,
                       std::size_t rows);

}  // namespace slant::io
