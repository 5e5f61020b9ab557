#include "fiberforge/presets.hpp"

namespace fiberforge {

namespace {

SimplicialComplex suspension_ngon(int n) {
    if (n < 3)
        throw ValidationError("suspension_ngon needs n >= 3, got " + std::to_string(n));
    // cycle 0..n-1, apexes n and n+1
    std::vector<Simplex> triangles;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        triangles.push_back(make_simplex({i, j, n}));
        triangles.push_back(make_simplex({i, j, n + 1}));
    }
    return SimplicialComplex::from_maximal(triangles);
}

SimplicialComplex icosahedron() {
    // 0..11; top apex 0, upper ring 1..5, lower ring 6..10, bottom apex 11
    std::vector<Simplex> t;
    for (int i = 0; i < 5; ++i) {
        int a = 1 + i, b = 1 + (i + 1) % 5;
        int c = 6 + i, d = 6 + (i + 1) % 5;
        t.push_back(make_simplex({0, a, b}));
        t.push_back(make_simplex({a, b, d}));
        t.push_back(make_simplex({a, c, d}));
        t.push_back(make_simplex({11, c, d}));
    }
    return SimplicialComplex::from_maximal(t);
}

SimplicialComplex subdivided_bipyramid() {
    // stellar subdivision of every face of the triangle bipyramid:
    // old vertices 0..4 (equator 0,1,2; apexes 3,4), new vertices 5..10
    std::vector<Simplex> base = {
        {0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}};
    std::vector<Simplex> t;
    int next = 5;
    for (const Simplex& f : base) {
        int w = next++;
        t.push_back(make_simplex({f[0], f[1], w}));
        t.push_back(make_simplex({f[1], f[2], w}));
        t.push_back(make_simplex({f[0], f[2], w}));
    }
    return SimplicialComplex::from_maximal(t);
}

} // namespace

SimplicialComplex generate(const std::string& preset, int n) {
    if (preset == "tetrahedron_boundary") {
        return SimplicialComplex::from_maximal(
            {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    }
    if (preset == "octahedron") return suspension_ngon(4);
    if (preset == "icosahedron") return icosahedron();
    if (preset == "bipyramid") return suspension_ngon(3);
    if (preset == "suspension_ngon") return suspension_ngon(n);
    if (preset == "subdivided_bipyramid") return subdivided_bipyramid();
    throw ValidationError("unknown preset '" + preset + "'");
}

std::vector<std::string> preset_names() {
    return {"tetrahedron_boundary", "octahedron",      "icosahedron",
            "bipyramid",            "suspension_ngon", "subdivided_bipyramid"};
}

} // namespace fiberforge
