#pragma once

#include "fiberforge/bundle.hpp"
#include "fiberforge/cochain.hpp"

namespace fiberforge {

struct LcfEntry {
    Rational value;
    long long positive = 0; // multicolored bead triples in cyclic order 012
    long long negative = 0; // ... in cyclic order 021
    long long triples = 0;  // #0 * #1 * #2
};

struct LcfResult {
    Cochain cochain;                  // degree 2; surface_canonical over surfaces
    std::map<Simplex, LcfEntry> entries;
    bool surface = false;
    Rational sum;                     // canonical sum when surface
};

// The local combinatorial formula on one triangle necklace:
// (negative - positive) / (2 * #0 * #1 * #2), where a triple of beads with
// one bead per color is positive iff walking counterclockwise from its
// color_order[0] bead meets the color_order[1] bead before color_order[2].
Rational lcf_value(const Necklace& n, const std::array<int, 3>& color_order);
LcfEntry lcf_entry(const Necklace& n, const std::array<int, 3>& color_order);

// Per-triangle LCF values of a bundle.  Over a closed oriented surface
// values are taken in the canonical orientation and summed; over any other
// base they are taken on sorted tuples and no sum is formed.
LcfResult lcf_report(const NecklaceBundle& bundle);

// Euler number of a bundle over a closed oriented surface: the LCF sum,
// which must be an integer.
long long euler_number(const NecklaceBundle& bundle);

} // namespace fiberforge
