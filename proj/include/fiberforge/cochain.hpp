#pragma once

#include <map>

#include "fiberforge/complex.hpp"
#include "fiberforge/rational.hpp"
#include "fiberforge/surface.hpp"

namespace fiberforge {

// Orientation convention for stored values.  Degree-1 cochains always refer
// to the reference orientation of an edge (smaller vertex to larger).
// Degree-2 values refer either to the sorted-tuple orientation of each
// triangle or, over a closed oriented surface, to its canonical orientation.
enum class CochainConvention { sorted_tuple, surface_canonical };

struct Cochain {
    int degree = 0;
    CochainConvention convention = CochainConvention::sorted_tuple;
    std::map<Simplex, Rational> values;

    const Rational& at(const Simplex& s) const {
        auto it = values.find(s);
        if (it == values.end())
            throw ValidationError("cochain has no value on simplex " + simplex_key(s));
        return it->second;
    }
};

Cochain zero_cochain(const SimplicialComplex& b, int degree,
                     CochainConvention convention = CochainConvention::sorted_tuple);

// Validates that c assigns a value to exactly the degree-simplices of b.
void validate_cochain(const SimplicialComplex& b, const Cochain& c);

// Simplicial coboundary (dc)(v0..vk+1) = sum_i (-1)^i c(drop v_i), evaluated
// on sorted tuples; requires and produces the sorted_tuple convention.
Cochain coboundary(const SimplicialComplex& b, const Cochain& c);

// Flip degree-2 values between the two conventions using the canonical
// surface orientation of b.
Cochain convert_convention(const SimplicialComplex& b, const Cochain& c,
                           CochainConvention target);

// true if c is a degree-1 cochain on b with every value +1 or -1.
bool is_orientation_cochain(const SimplicialComplex& b, const Cochain& c);

// F maps {3, -1} -> 1/4 and {-3, 1} -> -1/4, pointwise on a degree-2 cochain
// whose values lie in {±1, ±3}; F is odd, so it commutes with convention
// flips.  Throws on values outside the domain.
Rational apply_F_value(const Rational& v);
Cochain apply_F(const Cochain& c);

// G_a = F(da) - (3/4) da, an integer cochain with values in {±1, ±2};
// computed in the sorted_tuple convention on any base complex.
Cochain g_of_a(const SimplicialComplex& b, const Cochain& a);

// Sum of a degree-2 cochain over all triangles of a closed oriented surface,
// taken in the canonical orientation.
Rational surface_sum(const SimplicialComplex& b, const Cochain& c);

// The target cochain b of the prescribed-Euler-number construction:
// values ±1/4 in the surface_canonical convention with sum = euler.
// Deterministic: the first f/2 + 2*euler triangles in lexicographic order
// receive +1/4.  Throws ObstructionError when f(B) < 4|euler|.
Cochain choose_target_cochain(const SimplicialComplex& b, long long euler);

// Solves F(da) = target over GF(2) for a in Or(B) = {±1}-valued 1-cochains.
// One parity equation per triangle except sigma0; when the target sums to an
// integer the returned a satisfies F(da) = target on sigma0 as well.
// target must be ±1/4-valued in the surface_canonical convention.
Cochain solve_orientation_for_target(const SimplicialComplex& b, const Cochain& target,
                                     const Simplex& sigma0);

} // namespace fiberforge
