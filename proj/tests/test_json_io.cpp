#include <doctest.h>

#include "fiberforge/bundle.hpp"
#include "fiberforge/json_io.hpp"
#include "fiberforge/presets.hpp"

using namespace fiberforge;

TEST_CASE("complex round trip") {
    SimplicialComplex oct = generate("octahedron");
    Json j = complex_to_json(oct);
    CHECK(j["vertices"] == 6);
    SimplicialComplex back = complex_from_json(j);
    CHECK(back.f_vector() == oct.f_vector());
    CHECK(back.all_simplices() == oct.all_simplices());

    // isolated vertices survive via the vertex count
    SimplicialComplex sparse = SimplicialComplex::from_maximal({{0, 1}}, 4);
    SimplicialComplex sparse_back = complex_from_json(complex_to_json(sparse));
    CHECK(sparse_back.vertex_count() == 4);
}

TEST_CASE("cochain round trip keeps exact rationals") {
    SimplicialComplex b = SimplicialComplex::from_maximal({{0, 1, 2}});
    Cochain c;
    c.degree = 2;
    c.convention = CochainConvention::surface_canonical;
    c.values[{0, 1, 2}] = Rational(-5, 18);
    Json j = cochain_to_json(c);
    CHECK(j["values"]["0,1,2"] == "-5/18");
    Cochain back = cochain_from_json(j);
    CHECK(back.degree == 2);
    CHECK(back.convention == CochainConvention::surface_canonical);
    CHECK(back.at({0, 1, 2}) == Rational(-5, 18));

    // integers are accepted on read
    Json plain = parse_json(R"({"degree":1,"values":{"0,1":1,"1,2":"-1"}})");
    Cochain ints = cochain_from_json(plain);
    CHECK(ints.convention == CochainConvention::sorted_tuple);
    CHECK(ints.at({0, 1}) == Rational(1));
    CHECK(ints.at({1, 2}) == Rational(-1));
}

TEST_CASE("necklace round trip") {
    Necklace n;
    n.carrier = {0, 2};
    n.beads = {{5, 0, true}, {7, 2, false}, {9, 0, false}, {11, 2, true}, {3, 0, false}};
    Necklace back = necklace_from_json(necklace_to_json(n));
    CHECK(back.carrier == n.carrier);
    REQUIRE(back.size() == n.size());
    for (std::size_t i = 0; i < n.size(); ++i) CHECK(back.beads[i] == n.beads[i]);
}

TEST_CASE("bundle round trip preserves everything but renumbers nothing") {
    NecklaceBundle bundle = build_with_euler(generate("octahedron"), 2);
    Json j = bundle_to_json(bundle);
    NecklaceBundle back = bundle_from_json(j);
    CHECK(back.base.all_simplices() == bundle.base.all_simplices());
    REQUIRE(back.necklaces.size() == bundle.necklaces.size());
    for (const auto& [s, n] : bundle.necklaces) {
        REQUIRE(back.has_necklace(s));
        const Necklace& m = back.necklace(s);
        REQUIRE(m.size() == n.size());
        for (std::size_t i = 0; i < n.size(); ++i) CHECK(m.beads[i] == n.beads[i]);
    }
    CHECK(verify_consistency(back).ok());
    // the next fresh id clears every stored id
    BeadId max_id = -1;
    for (const auto& [s, n] : back.necklaces)
        for (const Bead& b : n.beads) max_id = std::max(max_id, b.id);
    CHECK(back.next_bead_id == max_id + 1);
}

TEST_CASE("strategy round trip") {
    Strategy s;
    s.initial_vertices = {3, 5};
    s.moves.push_back(GameMove{{0, 1}, {0, 1, 4}});
    s.moves.push_back(GameMove{{2, 6}, {2, 5, 6}});
    Strategy back = strategy_from_json(strategy_to_json(s));
    CHECK(back.initial_vertices == s.initial_vertices);
    CHECK(back.moves == s.moves);
}

TEST_CASE("parse_json rejects malformed text") {
    CHECK_THROWS_AS(parse_json("{not json"), ValidationError);
    CHECK_THROWS_AS(parse_json(""), ValidationError);
    CHECK_NOTHROW(parse_json("{}"));
}

TEST_CASE("malformed structures are rejected with a validation error") {
    CHECK_THROWS_AS(complex_from_json(parse_json(R"({"vertices": 3})")),
                    ValidationError);
    CHECK_THROWS_AS(complex_from_json(parse_json(
                        R"({"vertices": 2, "maximal_simplices": [[0, 0]]})")),
                    ValidationError);
    CHECK_THROWS_AS(necklace_from_json(parse_json(R"({"carrier": [0]})")),
                    ValidationError);
    CHECK_THROWS_AS(
        necklace_from_json(parse_json(
            R"({"carrier": [0], "beads": [{"id": 0, "color": "red"}]})")),
        ValidationError);
    CHECK_THROWS_AS(cochain_from_json(parse_json(R"({"degree": 1})")),
                    ValidationError);
    CHECK_THROWS_AS(cochain_from_json(parse_json(
                        R"({"degree": 1, "values": {"0,1": "1/0"}})")),
                    ValidationError);
    CHECK_THROWS_AS(bundle_from_json(parse_json(R"({"base": {}})")),
                    ValidationError);
    CHECK_THROWS_AS(strategy_from_json(parse_json(R"({"moves": []})")),
                    ValidationError);
}

TEST_CASE("report serializers carry the headline numbers") {
    NecklaceBundle bundle = build_with_euler(generate("octahedron"), 1);
    Json lcf = lcf_report_to_json(lcf_report(bundle));
    CHECK(lcf["surface"] == true);
    CHECK(lcf["sum"] == "1");
    CHECK(lcf["euler_number"] == 1);
    CHECK(lcf["triangles"].size() == 8);

    Json h = homology_to_json(HomologyGroup{1, {BigInt(2)}});
    CHECK(h["betti"] == 1);
    CHECK(h["torsion"][0] == "2");
    CHECK(h["group"] == "Z + Z/2");

    SimplicialComplex tet = generate("tetrahedron_boundary");
    EulerBoundCertificate cert = euler_bound(tet, solve(tet, true).strategy);
    Json cj = certificate_to_json(tet, cert);
    CHECK(cj["green"] == 1);
    CHECK(cj["euler_bound"] == 1);
    CHECK(cj.contains("base"));
    Strategy back = strategy_from_json(cj["strategy"]);
    CHECK(back.initial_vertices == cert.strategy.initial_vertices);
    CHECK(back.moves == cert.strategy.moves);
}
