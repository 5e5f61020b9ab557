#include "fiberforge/surface.hpp"

#include <algorithm>
#include <queue>

namespace fiberforge {

namespace {

// Directed boundary edges of an oriented triangle (v0,v1,v2):
// v0->v1, v1->v2, v2->v0.
std::array<std::pair<int, int>, 3> directed_edges(const std::array<int, 3>& t) {
    return {{{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}}};
}

void check_vertex_links(const SimplicialComplex& b) {
    for (const Simplex& vs : b.simplices(0)) {
        int v = vs[0];
        // link graph: neighbors of v, one edge per triangle at v
        std::map<int, std::vector<int>> link;
        for (const Simplex& t : b.simplices(2)) {
            if (!std::binary_search(t.begin(), t.end(), v)) continue;
            std::vector<int> rest;
            for (int u : t)
                if (u != v) rest.push_back(u);
            link[rest[0]].push_back(rest[1]);
            link[rest[1]].push_back(rest[0]);
        }
        if (link.empty())
            throw ValidationError("vertex " + std::to_string(v) +
                                  " is not contained in any triangle");
        std::size_t edge_count = 0;
        for (const auto& [u, nbrs] : link) {
            if (nbrs.size() != 2)
                throw ValidationError("link of vertex " + std::to_string(v) +
                                      " is not a single cycle");
            edge_count += nbrs.size();
        }
        edge_count /= 2;
        if (edge_count != link.size())
            throw ValidationError("link of vertex " + std::to_string(v) +
                                  " is not a single cycle");
        // connectivity of the link
        std::set<int> seen;
        std::vector<int> stack{link.begin()->first};
        seen.insert(link.begin()->first);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : link.at(u)) {
                if (!seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        if (seen.size() != link.size())
            throw ValidationError("link of vertex " + std::to_string(v) +
                                  " is not a single cycle");
    }
}

} // namespace

SurfaceOrientation verify_closed_oriented_surface(const SimplicialComplex& b) {
    if (b.dimension() != 2)
        throw ValidationError("complex is not 2-dimensional");
    // purity: every vertex and edge under a triangle
    for (int k = 0; k <= 1; ++k) {
        for (const Simplex& s : b.simplices(k)) {
            bool covered = false;
            for (const Simplex& t : b.simplices(2))
                if (is_face_of(s, t)) { covered = true; break; }
            if (!covered)
                throw ValidationError("complex is not pure: simplex " + simplex_key(s) +
                                      " is not a face of any triangle");
        }
    }
    // edge degrees
    std::map<Simplex, std::vector<Simplex>> edge_triangles;
    for (const Simplex& t : b.simplices(2)) {
        edge_triangles[{t[0], t[1]}].push_back(t);
        edge_triangles[{t[0], t[2]}].push_back(t);
        edge_triangles[{t[1], t[2]}].push_back(t);
    }
    for (const auto& [e, ts] : edge_triangles) {
        if (ts.size() == 1)
            throw ValidationError("boundary edge " + simplex_key(e));
        if (ts.size() > 2)
            throw ValidationError("non-manifold edge " + simplex_key(e) + " lies in " +
                                  std::to_string(ts.size()) + " triangles");
    }
    check_vertex_links(b);
    if (!b.is_connected())
        throw ValidationError("surface is not connected");

    // orientation by BFS over the dual graph, seeded at the least triangle
    SurfaceOrientation orientation;
    const auto& triangles = b.simplices(2);
    std::map<Simplex, bool> assigned;
    std::queue<Simplex> queue;
    assigned[triangles.front()] = false;
    queue.push(triangles.front());
    while (!queue.empty()) {
        Simplex t = queue.front();
        queue.pop();
        bool flip = assigned.at(t);
        std::array<int, 3> ot = flip ? std::array<int, 3>{t[0], t[2], t[1]}
                                     : std::array<int, 3>{t[0], t[1], t[2]};
        for (auto [from, to] : directed_edges(ot)) {
            Simplex e = from < to ? Simplex{from, to} : Simplex{to, from};
            for (const Simplex& nb : edge_triangles.at(e)) {
                if (nb == t) continue;
                // the neighbor must induce the reverse direction on e
                bool needs_flip = false;
                for (int variant = 0; variant < 2; ++variant) {
                    std::array<int, 3> on = variant ? std::array<int, 3>{nb[0], nb[2], nb[1]}
                                                    : std::array<int, 3>{nb[0], nb[1], nb[2]};
                    for (auto [f2, t2] : directed_edges(on)) {
                        if (f2 == to && t2 == from) {
                            needs_flip = variant == 1;
                        }
                    }
                }
                auto it = assigned.find(nb);
                if (it == assigned.end()) {
                    assigned[nb] = needs_flip;
                    queue.push(nb);
                } else if (it->second != needs_flip) {
                    throw ValidationError("surface is not orientable");
                }
            }
        }
    }
    orientation.flipped = std::move(assigned);
    return orientation;
}

bool is_closed_oriented_surface(const SimplicialComplex& b) {
    try {
        verify_closed_oriented_surface(b);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

int surface_genus(const SimplicialComplex& b) {
    verify_closed_oriented_surface(b);
    long long chi = b.euler_characteristic();
    return static_cast<int>((2 - chi) / 2);
}

} // namespace fiberforge
