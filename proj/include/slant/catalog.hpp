#pragma once

#include <string>
#include <vector>

#include "slant/surface.hpp"

namespace slant {

/// Named closed-form and generated exemplar surfaces.
///
///   helicoid          pitch (1), u_min (0), u_max (2π)
///   latitude_cone     beta ∈ (0, π/2) (π/4), u_min, u_max
///   hyperboloid       r > 0 (1), pitch (1), u_min, u_max
///   radial_plane      u_min, u_max
///   constant_sigma    d (0.5), s1_min/s1_max (∓0.9/|d|), alpha (0), step (0.005)
///   tabulated_kappa   knots, values (κ = s1 on [-2, 2]), alpha (0), step (0.005)
///
/// Throws UnknownCatalogName or BadParams.
RuledSurfaceSpec catalog(const std::string& name, const Params& params = {});

const std::vector<std::string>& catalog_names();

}  // namespace slant
