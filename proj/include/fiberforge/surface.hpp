#pragma once

#include <array>
#include <map>

#include "fiberforge/complex.hpp"

namespace fiberforge {

// Orientation of a closed surface, stored per triangle as the permutation
// class of the vertex order realizing it: flipped=false means the sorted
// tuple (a,b,c) taken as (a,b,c), flipped=true means (a,c,b).
struct SurfaceOrientation {
    std::map<Simplex, bool> flipped;

    std::array<int, 3> oriented_triangle(const Simplex& t) const {
        if (flipped.at(t)) return {t[0], t[2], t[1]};
        return {t[0], t[1], t[2]};
    }

    // +1 if the canonical orientation is the even permutation of the sorted
    // tuple, -1 otherwise.
    int sign(const Simplex& t) const { return flipped.at(t) ? -1 : +1; }
};

// Checks that B is a connected closed 2-manifold (pure, every edge in exactly
// two triangles, vertex links single cycles) admitting a consistent
// orientation, and returns the canonical orientation: the lexicographically
// least triangle receives its even permutation and the rest follows by
// propagation across shared edges.  Throws ValidationError otherwise.
SurfaceOrientation verify_closed_oriented_surface(const SimplicialComplex& b);

bool is_closed_oriented_surface(const SimplicialComplex& b);

// 2 - 2g for a connected closed orientable surface.
int surface_genus(const SimplicialComplex& b);

} // namespace fiberforge
