#include <doctest.h>

#include "fiberforge/game.hpp"
#include "fiberforge/presets.hpp"

using namespace fiberforge;

TEST_CASE("legal moves on the boundary tetrahedron") {
    SimplicialComplex tet = generate("tetrahedron_boundary");
    GameState s = initial_state(tet, {0, 1});
    CHECK(s.red_vertices == std::set<int>{0, 1});
    CHECK(s.green_faces.empty());

    std::vector<GameMove> moves = legal_moves(s);
    REQUIRE(moves.size() == 2);
    CHECK(moves[0] == GameMove{{2, 3}, {0, 2, 3}});
    CHECK(moves[1] == GameMove{{2, 3}, {1, 2, 3}});

    apply_move(s, moves[0]);
    CHECK(s.red_vertices == std::set<int>{0, 1, 2, 3});
    CHECK(s.red_edges == std::set<Simplex>{{2, 3}});
    CHECK(s.green_faces == std::set<Simplex>{{0, 2, 3}});
    CHECK(legal_moves(s).empty());
}

TEST_CASE("apply_move validates every clause") {
    SimplicialComplex tet = generate("tetrahedron_boundary");
    GameState s = initial_state(tet, {0});
    // endpoint already red
    CHECK_THROWS_AS(apply_move(s, GameMove{{0, 1}, {0, 1, 2}}), ValidationError);
    // witness vertex not yet colored
    CHECK_THROWS_AS(apply_move(s, GameMove{{1, 2}, {1, 2, 3}}), ValidationError);
    // face does not contain the edge
    CHECK_THROWS_AS(apply_move(s, GameMove{{1, 2}, {0, 1, 3}}), ValidationError);
    // edge not in the base
    CHECK_THROWS_AS(apply_move(s, GameMove{{1, 4}, {0, 1, 4}}), ValidationError);
    GameMove good{{1, 2}, {0, 1, 2}};
    apply_move(s, good);
    CHECK(s.move_log == std::vector<GameMove>{good});
    // the face is already green and its vertices are red
    CHECK_THROWS_AS(apply_move(s, GameMove{{1, 2}, {0, 1, 2}}), ValidationError);
}

TEST_CASE("red vertex count tracks the move count") {
    SimplicialComplex oct = generate("octahedron");
    SolveResult r = solve(oct, true);
    GameState end = replay(oct, r.strategy);
    CHECK(2 * end.green_faces.size() + r.strategy.initial_vertices.size() ==
          end.red_vertices.size());
    CHECK(end.move_log == r.strategy.moves);
    CHECK(static_cast<long long>(end.green_faces.size()) == r.best_green);
}

TEST_CASE("exhaustive solutions on the reference spheres") {
    SolveResult tet = solve(generate("tetrahedron_boundary"), true);
    CHECK(tet.best_green == 1);
    CHECK(tet.winning);

    SolveResult oct = solve(generate("octahedron"), true);
    CHECK(oct.best_green == 2);
    CHECK(oct.winning);

    SolveResult sub = solve(generate("subdivided_bipyramid"), true);
    CHECK(sub.best_green == 4);   // 18 faces: 4 < 18/4, one green short
    CHECK_FALSE(sub.winning);

    SolveResult bip = solve(generate("bipyramid"), true);
    CHECK(bip.winning);           // 6 faces: needs at least 2 green
    CHECK(bip.best_green >= 2);
}

TEST_CASE("solving is deterministic") {
    SimplicialComplex oct = generate("octahedron");
    SolveResult a = solve(oct, true);
    SolveResult b = solve(oct, true);
    CHECK(a.best_green == b.best_green);
    CHECK(a.strategy.initial_vertices == b.strategy.initial_vertices);
    CHECK(a.strategy.moves == b.strategy.moves);
}

TEST_CASE("the heuristic is a sound lower bound") {
    for (const char* name : {"tetrahedron_boundary", "octahedron", "bipyramid",
                             "subdivided_bipyramid"}) {
        SimplicialComplex base = generate(name);
        SolveResult greedy = solve(base, false);
        SolveResult exact = solve(base, true);
        CHECK(greedy.best_green <= exact.best_green);
        GameState end = replay(base, greedy.strategy);
        CHECK(static_cast<long long>(end.green_faces.size()) == greedy.best_green);
    }
}

TEST_CASE("solve rejects bad inputs") {
    // not a sphere
    SimplicialComplex solid = SimplicialComplex::from_maximal({{0, 1, 2, 3}});
    CHECK_THROWS_AS(solve(solid, true), ValidationError);
    // too large for the exhaustive budget
    SimplicialComplex big = generate("suspension_ngon", 13);
    CHECK(big.vertex_count() == 15);
    CHECK_THROWS_AS(solve(big, true), ValidationError);
    CHECK_NOTHROW(solve(big, false));
}

TEST_CASE("euler bound certificates") {
    SimplicialComplex tet = generate("tetrahedron_boundary");
    EulerBoundCertificate c = euler_bound(tet, solve(tet, true).strategy);
    CHECK(c.green == 1);
    CHECK(c.face_count == 4);
    CHECK(c.bound == 1);

    SimplicialComplex oct = generate("octahedron");
    EulerBoundCertificate oc = euler_bound(oct, solve(oct, true).strategy);
    CHECK(oc.green == 2);
    CHECK(oc.bound == 2);

    // a do-nothing strategy is not winning and certifies nothing
    Strategy idle;
    idle.initial_vertices = {0};
    CHECK_THROWS_AS(euler_bound(oct, idle), ValidationError);
    // a strategy that does not replay is rejected
    Strategy broken;
    broken.initial_vertices = {0};
    broken.moves.push_back(GameMove{{1, 2}, {1, 2, 3}});
    CHECK_THROWS_AS(euler_bound(tet, broken), ValidationError);
}

TEST_CASE("every small sphere admits a winning strategy") {
    LemmaWinReport report = verify_lemma_win(7);
    REQUIRE(report.entries.size() == 9); // 1 + 1 + 2 + 5 spheres
    CHECK(report.all_winning);
    for (const LemmaWinEntry& e : report.entries) {
        CHECK(e.winning);
        CHECK(4 * e.best_green >= e.face_count);
        CHECK(e.face_count == 2 * e.vertex_count - 4);
    }
    CHECK_THROWS_AS(verify_lemma_win(3), ValidationError);
    CHECK_THROWS_AS(verify_lemma_win(9), ValidationError);
}
