#pragma once

#include "fiberforge/complex.hpp"

namespace fiberforge {

// One representative per isomorphism class of triangulated 2-spheres with at
// most max_vertices vertices (max_vertices <= 8), ordered by vertex count and
// then by canonical form.
std::vector<SimplicialComplex> enumerate_spheres(int max_vertices);

// Minimal relabeling of the triangle list among all vertex bijections that
// sort vertices by degree.  Equal results characterize isomorphic complexes.
std::vector<Simplex> canonical_triangulation_form(const SimplicialComplex& b);

} // namespace fiberforge
