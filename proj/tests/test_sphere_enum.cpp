#include <doctest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "fiberforge/presets.hpp"
#include "fiberforge/sphere_enum.hpp"
#include "fiberforge/surface.hpp"

using namespace fiberforge;

namespace {

// Independent oracle: enumerate ALL triangle subsets on exactly v labeled
// vertices that form a closed surface with Euler characteristic 2 using
// every vertex, and count isomorphism classes via canonical forms.
std::set<std::vector<Simplex>> brute_force_sphere_classes(int v) {
    std::vector<Simplex> all_triangles;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c) all_triangles.push_back({a, b, c});

    const int want = 2 * v - 4;
    std::set<std::vector<Simplex>> classes;
    std::vector<Simplex> chosen;
    std::map<Simplex, int> edge_degree;

    auto edges_of = [](const Simplex& t) {
        return std::array<Simplex, 3>{Simplex{t[0], t[1]}, Simplex{t[0], t[2]},
                                      Simplex{t[1], t[2]}};
    };

    std::function<void(std::size_t)> search = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == want) {
            // pruning lookups leave zero entries behind; only positive
            // degrees belong to chosen triangles
            for (const auto& [e, d] : edge_degree)
                if (d != 0 && d != 2) return;
            std::set<int> used;
            for (const Simplex& t : chosen) used.insert(t.begin(), t.end());
            if (static_cast<int>(used.size()) != v) return;
            SimplicialComplex c = SimplicialComplex::from_maximal(chosen);
            if (!is_closed_oriented_surface(c) || c.euler_characteristic() != 2) return;
            classes.insert(canonical_triangulation_form(c));
            return;
        }
        for (std::size_t i = from; i < all_triangles.size(); ++i) {
            const Simplex& t = all_triangles[i];
            bool ok = true;
            for (const Simplex& e : edges_of(t))
                if (edge_degree[e] >= 2) ok = false;
            if (!ok) continue;
            for (const Simplex& e : edges_of(t)) ++edge_degree[e];
            chosen.push_back(t);
            search(i + 1);
            chosen.pop_back();
            for (const Simplex& e : edges_of(t)) --edge_degree[e];
        }
    };
    search(0);
    return classes;
}

} // namespace

TEST_CASE("sphere counts per vertex number") {
    std::vector<SimplicialComplex> spheres = enumerate_spheres(8);
    std::map<int, int> counts;
    for (const auto& s : spheres) ++counts[s.vertex_count()];
    CHECK(counts[4] == 1);
    CHECK(counts[5] == 1);
    CHECK(counts[6] == 2);
    CHECK(counts[7] == 5);
    CHECK(counts[8] == 14);
    CHECK(spheres.size() == 23);
}

TEST_CASE("every enumerated sphere is a genuine triangulated 2-sphere") {
    for (const SimplicialComplex& s : enumerate_spheres(8)) {
        CHECK(is_closed_oriented_surface(s));
        CHECK(s.euler_characteristic() == 2);
        CHECK(s.count(2) == 2 * s.vertex_count() - 4);
    }
}

TEST_CASE("enumerated spheres are pairwise non-isomorphic") {
    std::set<std::vector<Simplex>> forms;
    for (const SimplicialComplex& s : enumerate_spheres(8))
        CHECK(forms.insert(canonical_triangulation_form(s)).second);
}

TEST_CASE("brute-force oracle agrees for up to 6 vertices") {
    std::map<int, std::set<std::vector<Simplex>>> mine;
    for (const SimplicialComplex& s : enumerate_spheres(6))
        mine[s.vertex_count()].insert(canonical_triangulation_form(s));
    for (int v = 4; v <= 6; ++v) {
        std::set<std::vector<Simplex>> oracle = brute_force_sphere_classes(v);
        CHECK(oracle == mine[v]);
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    SimplicialComplex oct = generate("octahedron");
    std::vector<Simplex> reference = canonical_triangulation_form(oct);
    // deterministic pseudo-random permutations
    unsigned long long state = 12345;
    auto next = [&state] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> perm(oct.vertex_count());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[next() % i]);
        std::vector<Simplex> relabeled;
        for (const Simplex& t : oct.simplices(2))
            relabeled.push_back(make_simplex(
                {perm[static_cast<std::size_t>(t[0])], perm[static_cast<std::size_t>(t[1])],
                 perm[static_cast<std::size_t>(t[2])]}));
        SimplicialComplex shuffled = SimplicialComplex::from_maximal(relabeled);
        CHECK(canonical_triangulation_form(shuffled) == reference);
    }
    // ... and separates the two distinct 6-vertex spheres
    std::vector<SimplicialComplex> six;
    for (const SimplicialComplex& s : enumerate_spheres(6))
        if (s.vertex_count() == 6) six.push_back(s);
    REQUIRE(six.size() == 2);
    CHECK(canonical_triangulation_form(six[0]) != canonical_triangulation_form(six[1]));
}

TEST_CASE("enumeration bounds are validated") {
    CHECK_THROWS_AS(enumerate_spheres(3), ValidationError);
    CHECK_THROWS_AS(enumerate_spheres(9), ValidationError);
}
