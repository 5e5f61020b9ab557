#include "fiberforge/total_space.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fiberforge/surface.hpp"

namespace fiberforge {

namespace {

// First bead strictly after position i (counterclockwise) with the given
// color; positions wrap around.  Returns its index.
std::size_t next_of_color(const Necklace& n, std::size_t i, int color) {
    const std::size_t len = n.beads.size();
    for (std::size_t step = 1; step <= len; ++step) {
        std::size_t j = (i + step) % len;
        if (n.beads[j].color == color) return j;
    }
    throw InternalError("necklace over " + simplex_key(n.carrier) +
                        " has no bead of color " + std::to_string(color));
}

} // namespace

TotalSpace reconstruct(const NecklaceBundle& bundle) {
    ConsistencyReport consistency = verify_consistency(bundle);
    if (!consistency.ok())
        throw ValidationError("bundle is inconsistent: " + consistency.violations.front());
    for (const Simplex& s : bundle.base.all_simplices())
        if (!bundle.has_necklace(s))
            throw ValidationError("bundle has no necklace over " + simplex_key(s));

    TotalSpace t;

    // Vertices of E are the beads over the base vertices, in ascending id
    // order.  Consistency makes every bead of every necklace one of these.
    std::map<BeadId, int> color_of;
    for (int v = 0; v < bundle.base.vertex_count(); ++v) {
        const Necklace& fiber = bundle.necklace(Simplex{v});
        for (const Bead& b : fiber.beads) {
            if (color_of.count(b.id))
                throw ValidationError("bead id " + std::to_string(b.id) +
                                      " appears over two base vertices");
            color_of[b.id] = v;
        }
    }
    for (const auto& [id, color] : color_of) {
        t.bead_vertex[id] = static_cast<int>(t.vertex_beads.size());
        t.vertex_beads.push_back(id);
        t.projection.push_back(color);
    }

    // Cursor emission: one top simplex per bead of each necklace.
    std::vector<Simplex> emitted;
    for (const auto& [sigma, n] : bundle.necklaces) {
        const std::size_t len = n.beads.size();
        std::map<Simplex, BeadId> seen;
        auto& out = t.emissions[sigma];
        for (std::size_t i = 0; i < len; ++i) {
            const Bead& b = n.beads[i];
            std::set<int> verts;
            verts.insert(t.bead_vertex.at(b.id));
            for (int j : sigma) {
                const Bead& succ = n.beads[next_of_color(n, i, j)];
                verts.insert(t.bead_vertex.at(succ.id));
            }
            Simplex top(verts.begin(), verts.end());
            if (top.size() != sigma.size() + 1)
                throw ObstructionError(
                    "reconstruction over " + simplex_key(sigma) + " collapses at bead " +
                    std::to_string(b.id) +
                    ": emitted simplex has a repeated vertex (necklace is not classical)");
            auto [it, fresh] = seen.emplace(top, b.id);
            if (!fresh)
                throw ObstructionError(
                    "reconstruction over " + simplex_key(sigma) + ": beads " +
                    std::to_string(it->second) + " and " + std::to_string(b.id) +
                    " emit the same simplex (necklace is not classical)");
            out.emplace_back(top, b.id);
            emitted.push_back(std::move(top));
        }
    }

    t.complex = SimplicialComplex::from_maximal(emitted,
                                                static_cast<int>(t.vertex_beads.size()));
    return t;
}

namespace {

// Projection image of an E-simplex as a base simplex (set of colors).
Simplex project_simplex(const TotalSpace& t, const Simplex& s) {
    std::set<int> colors;
    for (int v : s) colors.insert(t.projection[static_cast<std::size_t>(v)]);
    return Simplex(colors.begin(), colors.end());
}

// The unique color that appears on two vertices of s, or -1 if all colors
// are distinct / some color appears three times.
int doubled_color(const TotalSpace& t, const Simplex& s) {
    std::map<int, int> mult;
    for (int v : s) ++mult[t.projection[static_cast<std::size_t>(v)]];
    int doubled = -1;
    for (const auto& [color, count] : mult) {
        if (count == 2 && doubled == -1) doubled = color;
        else if (count != 1) return -1;
    }
    return doubled;
}

// Is `cycle` (ids in walk order) a rotation of the bead ids of n, with
// matching colors?  Bold flags are invisible in the total space, so they are
// ignored here.
bool matches_necklace(const std::vector<BeadId>& cycle, const Necklace& n) {
    const std::size_t len = n.beads.size();
    if (cycle.size() != len || len == 0) return false;
    for (std::size_t shift = 0; shift < len; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < len && match; ++i)
            match = cycle[i] == n.beads[(shift + i) % len].id;
        if (match) return true;
    }
    return false;
}

// Orientability of the 3-dimensional part of E: propagate tetrahedron signs
// across shared triangles, requiring opposite induced orientations.
bool orientable_three_manifold(const SimplicialComplex& e) {
    const auto& tets = e.simplices(3);
    if (tets.empty()) return false;
    std::map<Simplex, std::vector<std::size_t>> by_facet;
    for (std::size_t i = 0; i < tets.size(); ++i) {
        const Simplex& s = tets[i];
        for (std::size_t d = 0; d < 4; ++d) {
            Simplex f;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != d) f.push_back(s[k]);
            by_facet[f].push_back(i);
        }
    }
    for (const auto& [f, owners] : by_facet)
        if (owners.size() != 2) return false;
    // sign of tet i relative to its sorted tuple; facet orientation induced
    // by dropping vertex d carries sign (-1)^d.
    std::vector<int> sign(tets.size(), 0);
    std::vector<std::size_t> stack;
    sign[0] = +1;
    stack.push_back(0);
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        const Simplex& s = tets[i];
        for (std::size_t d = 0; d < 4; ++d) {
            Simplex f;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != d) f.push_back(s[k]);
            const auto& owners = by_facet.at(f);
            std::size_t other = owners[0] == i ? owners[1] : owners[0];
            const Simplex& o = tets[other];
            std::size_t d2 = 0;
            while (d2 < 4 && std::binary_search(f.begin(), f.end(), o[d2])) ++d2;
            int induced_i = (d % 2 == 0) ? sign[i] : -sign[i];
            int induced_other = (d2 % 2 == 0) ? 1 : -1;
            // consistent orientation requires the two induced facet
            // orientations to be opposite
            int needed = -induced_i * induced_other;
            if (sign[other] == 0) {
                sign[other] = needed;
                stack.push_back(other);
            } else if (sign[other] != needed) {
                return false;
            }
        }
    }
    for (int s : sign)
        if (s == 0) return false; // disconnected in codimension 1
    return true;
}

// Is the given graph (edges on arbitrary int labels) a single cycle?
bool is_single_cycle(const std::vector<std::pair<int, int>>& edges) {
    std::map<int, std::set<int>> adj;
    for (const auto& [a, b] : edges) {
        if (a == b) return false;
        adj[a].insert(b);
        adj[b].insert(a);
    }
    if (adj.empty()) return false;
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) return false;
    if (edges.size() != adj.size()) return false;
    // connectivity
    std::set<int> seen;
    std::vector<int> stack{adj.begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == adj.size();
}

} // namespace

BundleCheckReport verify_bundle_triangulation(const TotalSpace& t,
                                              const NecklaceBundle& bundle) {
    BundleCheckReport report;
    auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

    const SimplicialComplex& e = t.complex;
    const SimplicialComplex& base = bundle.base;

    if (static_cast<int>(t.projection.size()) != e.vertex_count()) {
        fail("projection is not defined on every vertex of the total space");
        return report;
    }

    // (1) simplicial projection: the image of every simplex of E is a base
    // simplex.
    for (const Simplex& s : e.all_simplices()) {
        Simplex image = project_simplex(t, s);
        if (!base.contains(image)) {
            fail("projection of " + simplex_key(s) + " is " + simplex_key(image) +
                 ", not a simplex of the base");
            return report;
        }
    }

    // Gather the (k+1)-simplices of E lying over each base simplex.
    std::map<Simplex, std::vector<Simplex>> over;
    for (const Simplex& s : e.all_simplices()) {
        Simplex image = project_simplex(t, s);
        if (s.size() == image.size() + 1) over[image].push_back(s);
    }

    // (2) + (4): over every base simplex the transverse walk is a single
    // cycle reproducing the stored necklace (ids and colors; the framing is
    // not part of E).  Over a vertex this says the fiber is a cycle of the
    // fiber length.
    for (const Simplex& sigma : base.all_simplices()) {
        if (!bundle.has_necklace(sigma)) {
            fail("bundle has no necklace over " + simplex_key(sigma));
            continue;
        }
        const Necklace& n = bundle.necklace(sigma);
        const std::vector<Simplex>& tops = over[sigma];
        if (tops.size() != n.size()) {
            fail("over " + simplex_key(sigma) + ": " + std::to_string(tops.size()) +
                 " top simplices for a necklace of length " + std::to_string(n.size()));
            continue;
        }
        // Generating bead of each top simplex: of the two vertices sharing
        // the doubled color c, the one whose counterclockwise successor in
        // the fiber over c is the other.
        std::map<Simplex, BeadId> generator;
        bool local_ok = true;
        for (const Simplex& s : tops) {
            int c = doubled_color(t, s);
            if (c < 0) {
                fail("top simplex " + simplex_key(s) + " over " + simplex_key(sigma) +
                     " does not double exactly one color");
                local_ok = false;
                break;
            }
            std::vector<BeadId> pair;
            for (int v : s)
                if (t.projection[static_cast<std::size_t>(v)] == c)
                    pair.push_back(t.vertex_beads[static_cast<std::size_t>(v)]);
            const Necklace& fiber = bundle.necklace(Simplex{c});
            BeadId gen = 0;
            int hits = 0;
            for (int k = 0; k < 2; ++k) {
                if (fiber.color_successor(pair[static_cast<std::size_t>(k)]).id ==
                    pair[static_cast<std::size_t>(1 - k)]) {
                    gen = pair[static_cast<std::size_t>(k)];
                    ++hits;
                }
            }
            if (hits != 1) {
                fail("top simplex " + simplex_key(s) + " over " + simplex_key(sigma) +
                     ": the doubled vertices are not consecutive on the fiber over " +
                     std::to_string(c));
                local_ok = false;
                break;
            }
            generator[s] = gen;
        }
        if (!local_ok) continue;

        // Walk: from s, drop its generator; the remaining facet must lie in
        // exactly one other top simplex, the next one counterclockwise.
        std::map<const Simplex*, const Simplex*> next;
        for (const Simplex& s : tops) {
            const Simplex* succ = nullptr;
            for (const Simplex& candidate : tops) {
                if (&candidate == &s) continue;
                int drop = t.bead_vertex.at(generator.at(s));
                Simplex facet;
                for (int v : s)
                    if (v != drop) facet.push_back(v);
                if (is_face_of(facet, candidate)) {
                    if (succ) {
                        succ = nullptr;
                        break;
                    }
                    succ = &candidate;
                }
            }
            if (!succ) {
                fail("over " + simplex_key(sigma) +
                     ": the transverse walk is not a single cycle");
                local_ok = false;
                break;
            }
            next[&s] = succ;
        }
        if (!local_ok) continue;

        std::vector<BeadId> cycle;
        const Simplex* cursor = &tops.front();
        for (std::size_t step = 0; step < tops.size(); ++step) {
            cycle.push_back(generator.at(*cursor));
            cursor = next.at(cursor);
        }
        if (cursor != &tops.front() ||
            std::set<BeadId>(cycle.begin(), cycle.end()).size() != tops.size()) {
            fail("over " + simplex_key(sigma) +
                 ": the transverse walk does not close into a single cycle");
            continue;
        }
        if (!matches_necklace(cycle, n))
            fail("over " + simplex_key(sigma) +
                 ": the walk order of the top simplices does not reproduce the necklace");
    }

    // (3) face-consistency: the simplices over τ are exactly the faces of
    // the simplices over σ ⊃ τ that project onto τ.
    for (const Simplex& sigma : base.all_simplices()) {
        if (sigma.size() < 2) continue;
        for (const Simplex& tau : proper_faces(sigma)) {
            std::set<Simplex> from_above;
            for (const Simplex& s : over[sigma]) {
                for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
                    Simplex f;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (mask & (1u << i)) f.push_back(s[i]);
                    if (f.size() == tau.size() + 1 && project_simplex(t, f) == tau)
                        from_above.insert(std::move(f));
                }
            }
            std::set<Simplex> stored(over[tau].begin(), over[tau].end());
            if (from_above != stored) {
                fail("face-consistency fails between " + simplex_key(sigma) + " and " +
                     simplex_key(tau));
                break;
            }
        }
    }

    // (5) for a surface base: E is a connected closed orientable 3-manifold
    // with Euler characteristic 0.
    if (is_closed_oriented_surface(base)) {
        if (e.dimension() != 3) {
            fail("total space over a surface must be 3-dimensional");
            return report;
        }
        for (const Simplex& m : e.maximal_simplices()) {
            if (m.size() != 4) {
                fail("total space is not pure: maximal simplex " + simplex_key(m));
                return report;
            }
        }
        // every triangle in exactly two tetrahedra
        std::map<Simplex, int> tri_degree;
        for (const Simplex& s : e.simplices(3))
            for (std::size_t d = 0; d < 4; ++d) {
                Simplex f;
                for (std::size_t k = 0; k < 4; ++k)
                    if (k != d) f.push_back(s[k]);
                ++tri_degree[f];
            }
        for (const Simplex& f : e.simplices(2)) {
            auto it = tri_degree.find(f);
            if (it == tri_degree.end() || it->second != 2) {
                fail("triangle " + simplex_key(f) + " lies in " +
                     std::to_string(it == tri_degree.end() ? 0 : it->second) +
                     " tetrahedra, expected 2");
                return report;
            }
        }
        // edge links are single cycles
        for (const Simplex& edge : e.simplices(1)) {
            std::vector<std::pair<int, int>> link;
            for (const Simplex& s : e.simplices(3)) {
                if (!is_face_of(edge, s)) continue;
                std::vector<int> rest;
                for (int v : s)
                    if (v != edge[0] && v != edge[1]) rest.push_back(v);
                link.emplace_back(rest[0], rest[1]);
            }
            if (!is_single_cycle(link)) {
                fail("link of edge " + simplex_key(edge) + " is not a single cycle");
                return report;
            }
        }
        // vertex links are 2-spheres
        for (int v = 0; v < e.vertex_count(); ++v) {
            std::vector<Simplex> link_triangles;
            std::map<int, int> dense;
            for (const Simplex& s : e.simplices(3)) {
                if (!std::binary_search(s.begin(), s.end(), v)) continue;
                std::vector<int> rest;
                for (int w : s)
                    if (w != v) rest.push_back(w);
                for (int w : rest)
                    if (!dense.count(w)) {
                        int fresh = static_cast<int>(dense.size());
                        dense[w] = fresh;
                    }
                link_triangles.push_back(
                    make_simplex({dense[rest[0]], dense[rest[1]], dense[rest[2]]}));
            }
            if (link_triangles.empty()) {
                fail("vertex " + std::to_string(v) + " lies in no tetrahedron");
                return report;
            }
            SimplicialComplex link = SimplicialComplex::from_maximal(link_triangles);
            if (!is_closed_oriented_surface(link) || link.euler_characteristic() != 2) {
                fail("link of vertex " + std::to_string(v) + " is not a 2-sphere");
                return report;
            }
        }
        if (!e.is_connected()) fail("total space is not connected");
        if (!orientable_three_manifold(e)) fail("total space is not orientable");
        if (e.euler_characteristic() != 0)
            fail("total space has Euler characteristic " +
                 std::to_string(e.euler_characteristic()) + ", expected 0");
    }

    return report;
}

} // namespace fiberforge
