#pragma once

#include "fiberforge/complex.hpp"

namespace fiberforge {

// Named example bases.  Presets: tetrahedron_boundary, octahedron,
// icosahedron, bipyramid, suspension_ngon (takes n >= 3),
// subdivided_bipyramid.
SimplicialComplex generate(const std::string& preset, int n = 0);

std::vector<std::string> preset_names();

} // namespace fiberforge
