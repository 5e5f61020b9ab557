#include "fiberforge/game.hpp"

#include <algorithm>
#include <map>

#include "fiberforge/sphere_enum.hpp"
#include "fiberforge/surface.hpp"

namespace fiberforge {

namespace {

void require_sphere(const SimplicialComplex& base) {
    if (!is_closed_oriented_surface(base) || base.euler_characteristic() != 2)
        throw ValidationError("the coloring game needs a triangulated 2-sphere base");
}

} // namespace

GameState initial_state(const SimplicialComplex& base,
                        const std::vector<int>& initial_vertices) {
    if (initial_vertices.empty() || initial_vertices.size() > 2)
        throw ValidationError("initial pick must color one or two vertices");
    GameState s;
    s.base = &base;
    for (int v : initial_vertices) {
        if (v < 0 || v >= base.vertex_count())
            throw ValidationError("initial vertex " + std::to_string(v) +
                                  " is not a vertex of the base");
        if (!s.red_vertices.insert(v).second)
            throw ValidationError("initial vertices must be distinct");
    }
    return s;
}

std::vector<GameMove> legal_moves(const GameState& s) {
    std::vector<GameMove> moves;
    if (!s.base) return moves;
    for (const Simplex& face : s.base->simplices(2)) {
        for (int drop = 0; drop < 3; ++drop) {
            int witness = face[static_cast<std::size_t>(drop)];
            if (!s.red_vertices.count(witness)) continue;
            Simplex edge;
            for (int i = 0; i < 3; ++i)
                if (i != drop) edge.push_back(face[static_cast<std::size_t>(i)]);
            if (s.red_vertices.count(edge[0]) || s.red_vertices.count(edge[1])) continue;
            moves.push_back({edge, face});
        }
    }
    std::sort(moves.begin(), moves.end());
    return moves;
}

void apply_move(GameState& s, const GameMove& m) {
    if (!s.base) throw ValidationError("game state has no base");
    if (!s.base->contains(m.edge) || m.edge.size() != 2)
        throw ValidationError("move edge " + simplex_key(m.edge) +
                              " is not an edge of the base");
    if (!s.base->contains(m.face) || m.face.size() != 3)
        throw ValidationError("move face " + simplex_key(m.face) +
                              " is not a face of the base");
    if (!is_face_of(m.edge, m.face))
        throw ValidationError("move edge " + simplex_key(m.edge) +
                              " does not lie in face " + simplex_key(m.face));
    if (s.red_vertices.count(m.edge[0]) || s.red_vertices.count(m.edge[1]))
        throw ValidationError("move edge " + simplex_key(m.edge) +
                              " has a colored endpoint");
    int witness = -1;
    for (int v : m.face)
        if (v != m.edge[0] && v != m.edge[1]) witness = v;
    if (witness < 0 || !s.red_vertices.count(witness))
        throw ValidationError("witness vertex of face " + simplex_key(m.face) +
                              " is not colored");
    s.red_vertices.insert(m.edge[0]);
    s.red_vertices.insert(m.edge[1]);
    s.red_edges.insert(m.edge);
    s.green_faces.insert(m.face);
    s.move_log.push_back(m);
}

GameState replay(const SimplicialComplex& base, const Strategy& strategy) {
    GameState s = initial_state(base, strategy.initial_vertices);
    for (const GameMove& m : strategy.moves) apply_move(s, m);
    return s;
}

namespace {

// Exhaustive search shared across initial picks: the achievable green count
// from a position depends only on the set of red vertices.
struct Searcher {
    const SimplicialComplex& base;
    std::map<unsigned long long, long long> memo;

    explicit Searcher(const SimplicialComplex& b) : base(b) {}

    static unsigned long long key(const std::set<int>& red) {
        unsigned long long k = 0;
        for (int v : red) k |= 1ull << v;
        return k;
    }

    long long best_from(GameState& s) {
        unsigned long long k = key(s.red_vertices);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        long long best = 0;
        for (const GameMove& m : legal_moves(s)) {
            GameState next = s;
            apply_move(next, m);
            best = std::max(best, 1 + best_from(next));
        }
        memo[k] = best;
        return best;
    }

    // Lexicographically first move sequence achieving best_from(s).
    void extract(GameState& s, std::vector<GameMove>& out) {
        long long best = best_from(s);
        while (best > 0) {
            for (const GameMove& m : legal_moves(s)) {
                GameState next = s;
                apply_move(next, m);
                if (1 + best_from(next) == best) {
                    out.push_back(m);
                    s = next;
                    --best;
                    break;
                }
            }
        }
    }
};

SolveResult greedy_solve(const SimplicialComplex& base) {
    // Pick a maximum-degree vertex; its link is a cycle, and every second
    // link edge is playable against it.  Then keep playing the first legal
    // move.
    std::map<int, std::set<int>> neighbors;
    for (const Simplex& e : base.simplices(1)) {
        neighbors[e[0]].insert(e[1]);
        neighbors[e[1]].insert(e[0]);
    }
    int pick = 0;
    std::size_t degree = 0;
    for (const auto& [v, nb] : neighbors)
        if (nb.size() > degree) {
            degree = nb.size();
            pick = v;
        }
    Strategy strategy;
    strategy.initial_vertices = {pick};
    GameState s = initial_state(base, strategy.initial_vertices);
    while (true) {
        std::vector<GameMove> moves = legal_moves(s);
        if (moves.empty()) break;
        // prefer a move whose witness is the original pick while that lasts
        const GameMove* chosen = &moves.front();
        for (const GameMove& m : moves) {
            int witness = -1;
            for (int v : m.face)
                if (v != m.edge[0] && v != m.edge[1]) witness = v;
            if (witness == pick) {
                chosen = &m;
                break;
            }
        }
        apply_move(s, *chosen);
        strategy.moves.push_back(*chosen);
    }
    SolveResult result;
    result.best_green = static_cast<long long>(s.green_faces.size());
    result.strategy = std::move(strategy);
    return result;
}

} // namespace

SolveResult solve(const SimplicialComplex& base, bool exhaustive, int vertex_budget) {
    require_sphere(base);
    const long long f = base.count(2);
    SolveResult result;
    if (!exhaustive) {
        result = greedy_solve(base);
    } else {
        if (base.vertex_count() > vertex_budget)
            throw ValidationError("exhaustive game search limited to " +
                                  std::to_string(vertex_budget) + " vertices (base has " +
                                  std::to_string(base.vertex_count()) + ")");
        Searcher searcher(base);
        bool have = false;
        // all single vertices, then all pairs, lexicographically
        std::vector<std::vector<int>> picks;
        for (int v = 0; v < base.vertex_count(); ++v) picks.push_back({v});
        for (int v = 0; v < base.vertex_count(); ++v)
            for (int w = v + 1; w < base.vertex_count(); ++w) picks.push_back({v, w});
        for (const auto& pick : picks) {
            GameState s = initial_state(base, pick);
            long long green = searcher.best_from(s);
            if (!have || green > result.best_green) {
                have = true;
                result.best_green = green;
                result.strategy.initial_vertices = pick;
            }
        }
        GameState s = initial_state(base, result.strategy.initial_vertices);
        searcher.extract(s, result.strategy.moves);
    }
    result.winning = Rational(result.best_green) >= Rational(f, 4);
    return result;
}

EulerBoundCertificate euler_bound(const SimplicialComplex& base, const Strategy& strategy) {
    require_sphere(base);
    GameState s = replay(base, strategy);
    const long long f = base.count(2);
    const long long green = static_cast<long long>(s.green_faces.size());
    if (Rational(green) < Rational(f, 4))
        throw ValidationError("strategy with " + std::to_string(green) +
                              " green faces is not winning (needs at least f/4 = " +
                              Rational(f, 4).to_string() + ")");
    EulerBoundCertificate cert;
    cert.strategy = strategy;
    cert.green = green;
    cert.face_count = f;
    cert.bound = f / 2 - green;
    return cert;
}

LemmaWinReport verify_lemma_win(int max_vertices) {
    LemmaWinReport report;
    report.all_winning = true;
    for (const SimplicialComplex& sphere : enumerate_spheres(max_vertices)) {
        SolveResult r = solve(sphere, /*exhaustive=*/true);
        LemmaWinEntry entry;
        entry.vertex_count = sphere.vertex_count();
        entry.face_count = sphere.count(2);
        entry.best_green = r.best_green;
        entry.winning = r.winning;
        if (!r.winning) report.all_winning = false;
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace fiberforge
