#include "fiberforge/sphere_enum.hpp"

#include <algorithm>
#include <map>

#include "fiberforge/surface.hpp"

namespace fiberforge {

namespace {

// Backtracking generator for labeled triangulated spheres on exactly
// vertex_count vertices.  States grow a triangle set by closing the least
// open edge (an edge lying in exactly one triangle so far).  Vertices are
// introduced in first-use order, which keeps the number of labeled
// duplicates per isomorphism class small; a canonical-form pass dedupes the
// rest.
struct SphereSearch {
    int vertex_count;
    long long triangle_budget; // 2v - 4 triangles in a sphere
    std::vector<Simplex> triangles;
    std::map<Simplex, int> edge_degree;
    int used_vertices = 0;
    std::vector<std::vector<Simplex>> found;

    void add_triangle(const Simplex& t, int delta) {
        for (const Simplex& e :
             {Simplex{t[0], t[1]}, Simplex{t[0], t[2]}, Simplex{t[1], t[2]}})
            edge_degree[e] += delta;
    }

    bool least_open_edge(Simplex& out) const {
        for (const auto& [e, deg] : edge_degree) {
            if (deg == 1) { out = e; return true; }
        }
        return false;
    }

    void finish() {
        if (used_vertices != vertex_count) return;
        auto complex = SimplicialComplex::from_maximal(triangles);
        if (complex.euler_characteristic() != 2) return;
        if (!is_closed_oriented_surface(complex)) return;
        found.push_back(complex.simplices(2));
    }

    void run() {
        Simplex open;
        if (!least_open_edge(open)) {
            finish();
            return;
        }
        if (static_cast<long long>(triangles.size()) >= triangle_budget) return;
        int a = open[0], b = open[1];
        int w_max = std::min(used_vertices, vertex_count - 1);
        for (int w = 0; w <= w_max; ++w) {
            if (w == a || w == b) continue;
            Simplex t = make_simplex({a, b, w});
            if (std::find(triangles.begin(), triangles.end(), t) != triangles.end())
                continue;
            Simplex ea = make_simplex({a, w}), eb = make_simplex({b, w});
            auto deg = [&](const Simplex& e) {
                auto it = edge_degree.find(e);
                return it == edge_degree.end() ? 0 : it->second;
            };
            if (deg(ea) >= 2 || deg(eb) >= 2) continue;
            bool fresh = w == used_vertices;
            triangles.push_back(t);
            add_triangle(t, +1);
            if (fresh) ++used_vertices;
            run();
            if (fresh) --used_vertices;
            add_triangle(t, -1);
            triangles.pop_back();
        }
    }
};

std::vector<int> vertex_degrees(const SimplicialComplex& b) {
    std::vector<int> deg(static_cast<std::size_t>(b.vertex_count()), 0);
    for (const Simplex& e : b.simplices(1)) {
        ++deg[static_cast<std::size_t>(e[0])];
        ++deg[static_cast<std::size_t>(e[1])];
    }
    return deg;
}

} // namespace

std::vector<Simplex> canonical_triangulation_form(const SimplicialComplex& b) {
    const int v = b.vertex_count();
    std::vector<int> deg = vertex_degrees(b);
    // vertices grouped by degree, ascending; labels are assigned blockwise so
    // only permutations within a degree class need to be enumerated
    std::vector<int> order(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return deg[static_cast<std::size_t>(x)] <
                                                deg[static_cast<std::size_t>(y)]; });
    std::vector<std::pair<std::size_t, std::size_t>> classes; // [begin,end) in order
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= order.size(); ++i) {
        if (i == order.size() ||
            deg[static_cast<std::size_t>(order[i])] !=
                deg[static_cast<std::size_t>(order[begin])]) {
            classes.emplace_back(begin, i);
            begin = i;
        }
    }

    const auto& triangles = b.simplices(2);
    std::vector<Simplex> best;
    std::vector<int> label(static_cast<std::size_t>(v));
    // odometer over per-class permutations
    std::vector<std::vector<int>> perms(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto [lo, hi] = classes[c];
        perms[c].assign(order.begin() + static_cast<long>(lo),
                        order.begin() + static_cast<long>(hi));
        std::sort(perms[c].begin(), perms[c].end());
    }
    bool done = false;
    while (!done) {
        std::size_t next_label = 0;
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int src : perms[c]) label[static_cast<std::size_t>(src)] =
                static_cast<int>(next_label++);
        std::vector<Simplex> relabeled;
        relabeled.reserve(triangles.size());
        for (const Simplex& t : triangles)
            relabeled.push_back(make_simplex({label[static_cast<std::size_t>(t[0])],
                                              label[static_cast<std::size_t>(t[1])],
                                              label[static_cast<std::size_t>(t[2])]}));
        std::sort(relabeled.begin(), relabeled.end());
        if (best.empty() || relabeled < best) best = std::move(relabeled);
        // advance odometer
        done = true;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (std::next_permutation(perms[c].begin(), perms[c].end())) {
                done = false;
                break;
            }
        }
    }
    return best;
}

std::vector<SimplicialComplex> enumerate_spheres(int max_vertices) {
    if (max_vertices < 4)
        throw ValidationError("no triangulated sphere has fewer than 4 vertices");
    if (max_vertices > 8)
        throw ValidationError("sphere enumeration is limited to 8 vertices");
    std::vector<SimplicialComplex> out;
    for (int v = 4; v <= max_vertices; ++v) {
        SphereSearch search;
        search.vertex_count = v;
        search.triangle_budget = 2LL * v - 4;
        search.triangles.push_back(make_simplex({0, 1, 2}));
        search.add_triangle(search.triangles[0], +1);
        search.used_vertices = 3;
        search.run();
        std::vector<std::vector<Simplex>> canon;
        for (const auto& ts : search.found)
            canon.push_back(
                canonical_triangulation_form(SimplicialComplex::from_maximal(ts)));
        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        for (const auto& ts : canon)
            out.push_back(SimplicialComplex::from_maximal(ts));
    }
    return out;
}

} // namespace fiberforge
