#pragma once

#include "fiberforge/bundle.hpp"

namespace fiberforge {

// Explicit triangulation of the total space of a bundle.  Vertices of the
// complex are dense indices; vertex_beads maps them back to bead ids (which
// are the fiber vertices over the base vertices), and projection maps each
// vertex of E to its base vertex.
struct TotalSpace {
    SimplicialComplex complex;
    std::vector<BeadId> vertex_beads;                    // index -> bead id, ascending
    std::map<BeadId, int> bead_vertex;                   // bead id -> index
    std::vector<int> projection;                         // index -> base vertex
    // emissions[sigma] = the (dim sigma + 1)-simplices of E over sigma, each
    // with its generating bead, in counterclockwise bead order
    std::map<Simplex, std::vector<std::pair<Simplex, BeadId>>> emissions;
};

// Cursor construction.  For each base simplex sigma and each bead b of color
// c in its necklace, the emitted simplex consists of b, the counterclockwise
// successor of b in the fiber over c, and for every other vertex j of sigma
// the successor (in the fiber over j) of the last j-colored bead strictly
// before b.  E is the downward closure of all emissions.  Throws
// ObstructionError when an emission degenerates (repeated vertex or two
// beads yielding the same simplex), which happens exactly on non-classical
// fibers; throws ValidationError when the bundle is inconsistent.
TotalSpace reconstruct(const NecklaceBundle& bundle);

struct BundleCheckReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Independent verification that T triangulates the bundle:
//  (1) the projection is simplicial onto the base,
//  (2) the preimage of each base vertex is a single cycle of fiber length,
//  (3) emissions are face-consistent across every face pair of the base,
//  (4) walking the top simplices over each base simplex recovers the
//      necklace, and
//  (5) for a surface base, E is a connected closed orientable 3-manifold
//      with Euler characteristic 0.
BundleCheckReport verify_bundle_triangulation(const TotalSpace& t,
                                              const NecklaceBundle& bundle);

} // namespace fiberforge
