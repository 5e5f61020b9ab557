#pragma once

#include <map>

#include "fiberforge/cochain.hpp"
#include "fiberforge/complex.hpp"
#include "fiberforge/necklace.hpp"

namespace fiberforge {

// A compatible family of framed necklaces indexed by the simplices of the
// base: restriction to a face must reproduce the face's necklace bead for
// bead.  A partial bundle (during skeleton extension) only carries necklaces
// for low-dimensional simplices.
struct NecklaceBundle {
    SimplicialComplex base;
    std::map<Simplex, Necklace> necklaces;
    BeadId next_bead_id = 0;

    const Necklace& necklace(const Simplex& s) const {
        auto it = necklaces.find(s);
        if (it == necklaces.end())
            throw ValidationError("bundle has no necklace over " + simplex_key(s));
        return it->second;
    }
    bool has_necklace(const Simplex& s) const { return necklaces.count(s) > 0; }
};

struct ConsistencyReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks carrier/color coverage, the restriction identity for every face
// pair, distinctness of bead ids per color class, and framing restriction.
ConsistencyReport verify_consistency(const NecklaceBundle& bundle);

// Classicality of every necklace; first failure reported.
ClassicalCheck check_bundle_classical(const NecklaceBundle& bundle);

// The small symmetric bundle corresponding to a in Or(B) over a closed
// oriented surface.  Each vertex gets beads 2v (bold) and 2v+1; each edge
// alternates its four beads according to the direction a assigns; each
// triangle receives the framed small necklace inducing those directions.
NecklaceBundle small_bundle_from_orientation(const SimplicialComplex& b,
                                             const Cochain& a);

// Same construction on the 2-skeleton of an arbitrary complex; necklaces are
// assigned only to simplices of dimension <= 2.
NecklaceBundle small_skeleton_bundle(const SimplicialComplex& b, const Cochain& a);

// Inserts a fresh bead immediately after the given bead (counterclockwise)
// in every necklace whose carrier contains the vertex.  Returns the new id.
BeadId double_bead(NecklaceBundle& bundle, int vertex, BeadId bead);

// Doubles the bold bead over every vertex, making a small bundle classical.
void double_bold_beads(NecklaceBundle& bundle);

// Classical triangulated bundle over a closed oriented surface with the
// prescribed Euler number; 3 v(B) fiber vertices, 9 beads per triangle.
// Throws ObstructionError when f(B) < 4|euler|.
NecklaceBundle build_with_euler(const SimplicialComplex& b, long long euler);

// The restriction-of-one-necklace construction for the trivial bundle over
// any base: N = (0,0,1,1,...,N,N,bold 0,...,bold N) on the full vertex set,
// every simplex receives its restriction.  Classical, 3 v(B) fiber vertices.
NecklaceBundle trivial_bundle(const SimplicialComplex& b);

// Extends a small symmetric bundle given on the 2-skeleton over all higher
// simplices, dimension by dimension.  A 3-simplex whose boundary bundle is
// the Hopf bundle is a genuine obstruction and throws ObstructionError
// naming the simplex; higher merges cannot fail.
NecklaceBundle extend_to_skeleton(const NecklaceBundle& partial);

// Full pipeline over an arbitrary base: checks the cocycle condition
// d(F(da)) = 0 on every 3-simplex, builds the small skeleton bundle, extends
// it, and doubles one bead per vertex.  If h2_two_torsion is non-null it
// receives whether H^2(B;Z) contains 2-torsion (the hypothesis under which
// every Euler class of the form G_a is realized by such a bundle is its
// absence).
NecklaceBundle build_general(const SimplicialComplex& b, const Cochain& a,
                             bool* h2_two_torsion = nullptr);

} // namespace fiberforge
