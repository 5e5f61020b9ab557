#pragma once

#include <set>
#include <vector>

#include "fiberforge/complex.hpp"
#include "fiberforge/rational.hpp"

namespace fiberforge {

// One move of the coloring game: an edge whose endpoints are both uncolored,
// together with the witness face whose third vertex is already colored.  The
// move colors the edge and its endpoints red and the face green.
struct GameMove {
    Simplex edge;
    Simplex face;

    friend bool operator<(const GameMove& a, const GameMove& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.face < b.face;
    }
    friend bool operator==(const GameMove& a, const GameMove& b) {
        return a.edge == b.edge && a.face == b.face;
    }
};

struct GameState {
    const SimplicialComplex* base = nullptr;
    std::set<int> red_vertices;
    std::set<Simplex> red_edges;
    std::set<Simplex> green_faces;
    std::vector<GameMove> move_log;
};

struct Strategy {
    std::vector<int> initial_vertices; // one or two
    std::vector<GameMove> moves;
};

GameState initial_state(const SimplicialComplex& base,
                        const std::vector<int>& initial_vertices);

// All (edge, witness face) pairs playable in s, lexicographically ordered.
std::vector<GameMove> legal_moves(const GameState& s);

void apply_move(GameState& s, const GameMove& m); // throws if illegal

// Replays a strategy from scratch; throws ValidationError on an illegal move.
GameState replay(const SimplicialComplex& base, const Strategy& strategy);

struct SolveResult {
    long long best_green = 0;
    Strategy strategy;
    bool winning = false; // best_green >= f/4, exact rational comparison
};

// Maximum achievable green count.  Exhaustive mode: depth-first search over
// red-vertex sets with memoization, trying every initial single vertex and
// vertex pair; deterministic lexicographic tie-breaking.  Heuristic mode:
// greedy from a maximum-degree vertex (link-edge matching first), a lower
// bound.  The base must be a triangulated 2-sphere; exhaustive mode refuses
// bases with more than vertex_budget vertices.
SolveResult solve(const SimplicialComplex& base, bool exhaustive,
                  int vertex_budget = 14);

struct EulerBoundCertificate {
    Strategy strategy;
    long long green = 0;       // green faces achieved by the strategy
    long long bound = 0;       // f/2 - green; no classical bundle with |E| above it
    long long face_count = 0;
};

// Certificate from a winning strategy: no circle bundle with |Euler number|
// exceeding f/2 - green admits a classical triangulation over this base.
// Throws ValidationError when the strategy does not replay or is not winning.
EulerBoundCertificate euler_bound(const SimplicialComplex& base, const Strategy& strategy);

struct LemmaWinEntry {
    int vertex_count = 0;
    long long face_count = 0;
    long long best_green = 0;
    bool winning = false;
};

struct LemmaWinReport {
    std::vector<LemmaWinEntry> entries;
    bool all_winning = false;
};

// Exhaustively solves the game on every triangulated sphere with at most
// max_vertices vertices (4 <= max_vertices <= 8).
LemmaWinReport verify_lemma_win(int max_vertices);

} // namespace fiberforge
