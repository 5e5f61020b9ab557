#pragma once

#include <array>
#include <string>
#include <vector>

#include "fiberforge/complex.hpp"

namespace fiberforge {

using BeadId = long long;

struct Bead {
    BeadId id = 0;
    int color = 0;      // a vertex of the carrier simplex
    bool bold = false;  // framing marker

    friend bool operator==(const Bead& a, const Bead& b) {
        return a.id == b.id && a.color == b.color && a.bold == b.bold;
    }
};

// Cyclic word of beads over a base simplex; the stored sequence is the
// counterclockwise order of the fiber circle.  A framing marks exactly one
// bead of each color as bold.
struct Necklace {
    Simplex carrier;
    std::vector<Bead> beads;

    std::size_t size() const { return beads.size(); }
    long long count_color(int color) const;
    std::size_t index_of(BeadId id) const;        // throws if absent
    const Bead& bead(BeadId id) const;
    const Bead& at(std::size_t i) const { return beads[i % beads.size()]; }

    // Successor of the bead with the given id among beads of its own color,
    // in counterclockwise order.
    const Bead& color_successor(BeadId id) const;

    bool has_framing() const;                     // exactly one bold per color
    bool is_small_symmetric() const;              // 2 beads per color, colors repeat
                                                  // with period size()/2
    BeadId bold_bead(int color) const;            // throws without framing
};

// Subsequence of beads whose color lies in face; face must be a subset of
// the carrier.  Bead ids and bold flags are preserved.
Necklace restrict_necklace(const Necklace& n, const Simplex& face);

// Rotation-invariant representative: the rotation with the lexicographically
// least color word, ties broken by the bead-id sequence.
Necklace canonical_form(const Necklace& n);

bool cyclically_equal(const Necklace& a, const Necklace& b);

struct ClassicalCheck {
    bool ok = false;
    std::string reason;
};

// Classical iff every color occurs at least three times and a two-colored
// necklace does not consist of two monochromatic blocks.
ClassicalCheck check_classical(const Necklace& n);

struct DirectedEdge {
    int from = 0;
    int to = 0;
};

// Orientation induced by a framed two-colored necklace on its carrier edge
// {i,j}: i->j iff the first j-colored bead met counterclockwise from the
// bold i-bead is the bold one.
DirectedEdge framing_to_orientation(const Necklace& n);

// The unique (up to rotation) framed small symmetric necklace over the given
// triangle inducing the requested directions on its edges; ascending[k] says
// whether edge k of {(v0,v1), (v0,v2), (v1,v2)} is directed from the smaller
// to the larger vertex.  Beads are instantiated with id 2*color for the bold
// bead and 2*color+1 for the plain one.
Necklace small_necklace_for_directions(const Simplex& triangle,
                                       const std::array<bool, 3>& ascending);

// Variant taking an oriented triangle (v0,v1,v2) and edge_signs[k] = +1 iff
// edge k of {v0v1, v1v2, v2v0} is directed consistently with that
// orientation.
Necklace small_framed_necklace(const std::array<int, 3>& oriented_triangle,
                               const std::array<int, 3>& edge_signs);

} // namespace fiberforge
