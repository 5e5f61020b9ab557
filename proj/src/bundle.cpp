#include "fiberforge/bundle.hpp"

#include <algorithm>
#include <set>

#include "fiberforge/homology.hpp"

namespace fiberforge {

namespace {

BeadId max_bead_id(const NecklaceBundle& bundle) {
    BeadId m = -1;
    for (const auto& [s, n] : bundle.necklaces)
        for (const Bead& b : n.beads) m = std::max(m, b.id);
    return m;
}

bool edge_ascending(const Cochain& a, const Simplex& edge) {
    return a.at(edge) == Rational(1);
}

} // namespace

ConsistencyReport verify_consistency(const NecklaceBundle& bundle) {
    ConsistencyReport report;
    for (const auto& [s, n] : bundle.necklaces) {
        if (n.carrier != s) {
            report.violations.push_back("necklace stored under " + simplex_key(s) +
                                        " has carrier " + simplex_key(n.carrier));
            continue;
        }
        if (!bundle.base.contains(s)) {
            report.violations.push_back("carrier " + simplex_key(s) +
                                        " is not a simplex of the base");
            continue;
        }
        for (int v : s) {
            if (n.count_color(v) == 0)
                report.violations.push_back("necklace over " + simplex_key(s) +
                                            " has no bead of color " + std::to_string(v));
        }
        for (const Bead& b : n.beads) {
            if (!std::binary_search(s.begin(), s.end(), b.color))
                report.violations.push_back("necklace over " + simplex_key(s) +
                                            " has a bead of foreign color " +
                                            std::to_string(b.color));
        }
        std::set<BeadId> ids;
        for (const Bead& b : n.beads) {
            if (!ids.insert(b.id).second)
                report.violations.push_back("necklace over " + simplex_key(s) +
                                            " repeats bead id " + std::to_string(b.id));
        }
        if (!n.has_framing())
            report.violations.push_back("necklace over " + simplex_key(s) +
                                        " has no framing (one bold bead per color)");
        // restriction identity against every stored face
        for (const Simplex& face : proper_faces(s)) {
            if (!bundle.has_necklace(face)) {
                report.violations.push_back("no necklace over face " + simplex_key(face) +
                                            " of " + simplex_key(s));
                continue;
            }
            Necklace restricted = restrict_necklace(n, face);
            if (!cyclically_equal(restricted, bundle.necklace(face)))
                report.violations.push_back("restriction of " + simplex_key(s) + " to " +
                                            simplex_key(face) +
                                            " differs from the stored necklace");
        }
    }
    return report;
}

ClassicalCheck check_bundle_classical(const NecklaceBundle& bundle) {
    for (const auto& [s, n] : bundle.necklaces) {
        ClassicalCheck c = check_classical(n);
        if (!c.ok) return {false, "necklace over " + simplex_key(s) + ": " + c.reason};
    }
    return {true, ""};
}

NecklaceBundle small_skeleton_bundle(const SimplicialComplex& b, const Cochain& a) {
    if (!is_orientation_cochain(b, a))
        throw ValidationError("expected a ±1-valued 1-cochain on all edges of the base");
    NecklaceBundle bundle;
    bundle.base = b;
    for (const Simplex& vs : b.simplices(0)) {
        int v = vs[0];
        Necklace n;
        n.carrier = vs;
        n.beads = {{2LL * v, v, true}, {2LL * v + 1, v, false}};
        bundle.necklaces[vs] = std::move(n);
    }
    for (const Simplex& e : b.simplices(1)) {
        int u = e[0], v = e[1];
        Necklace n;
        n.carrier = e;
        if (edge_ascending(a, e))
            n.beads = {{2LL * u, u, true}, {2LL * v, v, true},
                       {2LL * u + 1, u, false}, {2LL * v + 1, v, false}};
        else
            n.beads = {{2LL * u, u, true}, {2LL * v + 1, v, false},
                       {2LL * u + 1, u, false}, {2LL * v, v, true}};
        bundle.necklaces[e] = canonical_form(n);
    }
    for (const Simplex& t : b.simplices(2)) {
        std::array<bool, 3> ascending = {edge_ascending(a, {t[0], t[1]}),
                                         edge_ascending(a, {t[0], t[2]}),
                                         edge_ascending(a, {t[1], t[2]})};
        bundle.necklaces[t] = small_necklace_for_directions(t, ascending);
    }
    bundle.next_bead_id = max_bead_id(bundle) + 1;
    return bundle;
}

NecklaceBundle small_bundle_from_orientation(const SimplicialComplex& b,
                                             const Cochain& a) {
    verify_closed_oriented_surface(b);
    return small_skeleton_bundle(b, a);
}

BeadId double_bead(NecklaceBundle& bundle, int vertex, BeadId bead) {
    Simplex vs{vertex};
    if (!bundle.has_necklace(vs))
        throw ValidationError("bundle has no necklace over vertex " +
                              std::to_string(vertex));
    const Necklace& vn = bundle.necklace(vs);
    bool found = false;
    for (const Bead& b : vn.beads)
        if (b.id == bead) { found = b.color == vertex; break; }
    if (!found)
        throw ValidationError("bead " + std::to_string(bead) + " does not lie over vertex " +
                              std::to_string(vertex));
    BeadId fresh = bundle.next_bead_id++;
    for (auto& [s, n] : bundle.necklaces) {
        if (!std::binary_search(s.begin(), s.end(), vertex)) continue;
        std::size_t i = n.index_of(bead);
        n.beads.insert(n.beads.begin() + static_cast<long>(i) + 1,
                       Bead{fresh, vertex, false});
    }
    return fresh;
}

void double_bold_beads(NecklaceBundle& bundle) {
    for (const Simplex& vs : bundle.base.simplices(0)) {
        int v = vs[0];
        double_bead(bundle, v, bundle.necklace(vs).bold_bead(v));
    }
}

NecklaceBundle build_with_euler(const SimplicialComplex& b, long long euler) {
    Cochain target = choose_target_cochain(b, euler);
    const Simplex sigma0 = b.simplices(2).front();
    Cochain a = solve_orientation_for_target(b, target, sigma0);
    NecklaceBundle bundle = small_bundle_from_orientation(b, a);
    double_bold_beads(bundle);
    return bundle;
}

NecklaceBundle trivial_bundle(const SimplicialComplex& b) {
    // master necklace over the full vertex set:
    // (0,0,1,1,...,N,N, bold 0, bold 1, ..., bold N), bead ids by position
    const int v = b.vertex_count();
    Necklace master;
    for (int i = 0; i < v; ++i) master.carrier.push_back(i);
    for (int i = 0; i < v; ++i) {
        master.beads.push_back({2LL * i, i, false});
        master.beads.push_back({2LL * i + 1, i, false});
    }
    for (int i = 0; i < v; ++i) master.beads.push_back({2LL * v + i, i, true});
    NecklaceBundle bundle;
    bundle.base = b;
    for (const Simplex& s : b.all_simplices())
        bundle.necklaces[s] = restrict_necklace(master, s);
    bundle.next_bead_id = 3LL * v;
    return bundle;
}

namespace {

// Merge of the necklaces on the proper faces of s into one necklace over s.
// Anchored at the bold bead of the least vertex; every other bead pair is
// ordered by which comes first counterclockwise from the anchor in the
// necklace over {least vertex} ∪ {their colors} (a face of dimension <= 2).
// The candidate is then verified against every stored proper face; for a
// 3-simplex an inconsistency means the boundary bundle is the Hopf bundle.
Necklace merge_over(const NecklaceBundle& bundle, const Simplex& s) {
    const int v0 = s[0];
    const Necklace& anchor_necklace = bundle.necklace(Simplex{v0});
    const BeadId anchor = anchor_necklace.bold_bead(v0);

    std::vector<Bead> others; // every bead except the anchor
    for (int v : s) {
        for (const Bead& b : bundle.necklace(Simplex{v}).beads)
            if (b.id != anchor) others.push_back(b);
    }

    // position of a bead counterclockwise from the anchor in the necklace
    // over tau = {v0} ∪ {color}, used for same-color ties and anchor fiber
    auto comes_before = [&](const Bead& x, const Bead& y) -> bool {
        std::set<int> support{v0, x.color, y.color};
        Simplex tau(support.begin(), support.end());
        const Necklace& n = bundle.necklace(tau);
        std::size_t start = n.index_of(anchor);
        for (std::size_t step = 1; step < n.beads.size(); ++step) {
            const Bead& b = n.at(start + step);
            if (b.id == x.id) return true;
            if (b.id == y.id) return false;
        }
        throw InternalError("beads not found while merging over " + simplex_key(s));
    };

    // tournament; a cycle here (or a failed verification below) is the
    // obstruction for 3-simplices
    const std::size_t m = others.size();
    std::vector<std::vector<char>> before(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            bool ij = comes_before(others[i], others[j]);
            before[i][j] = ij;
            before[j][i] = !ij;
        }
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    // a transitive tournament has pairwise distinct out-degrees; sort by them
    std::vector<std::size_t> outdeg(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) outdeg[i] += before[i][j];
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return outdeg[i] > outdeg[j]; });
    bool transitive = true;
    for (std::size_t i = 0; i + 1 < m && transitive; ++i)
        if (!before[order[i]][order[i + 1]] || outdeg[order[i]] != m - 1 - i)
            transitive = false;

    Necklace merged;
    merged.carrier = s;
    if (transitive) {
        merged.beads.push_back(anchor_necklace.bead(anchor));
        for (std::size_t i : order) merged.beads.push_back(others[i]);
        for (const Simplex& face : proper_faces(s)) {
            if (!bundle.has_necklace(face)) continue;
            if (!cyclically_equal(restrict_necklace(merged, face),
                                  bundle.necklace(face))) {
                transitive = false;
                break;
            }
        }
    }
    if (!transitive || !merged.is_small_symmetric()) {
        if (s.size() == 4)
            throw ObstructionError(
                "bundle over the boundary of 3-simplex " + simplex_key(s) +
                " is the Hopf bundle; no extension exists (Hopf obstruction)");
        throw InternalError("skeleton extension failed over " + simplex_key(s));
    }
    return canonical_form(merged);
}

} // namespace

NecklaceBundle extend_to_skeleton(const NecklaceBundle& partial) {
    for (int k = 0; k <= std::min(2, partial.base.dimension()); ++k)
        for (const Simplex& s : partial.base.simplices(k))
            if (!partial.has_necklace(s))
                throw ValidationError("partial bundle misses a necklace over " +
                                      simplex_key(s));
    for (const auto& [s, n] : partial.necklaces) {
        if (s.size() > 3)
            throw ValidationError("partial bundle already carries a necklace over " +
                                  simplex_key(s));
        if (!n.is_small_symmetric())
            throw ValidationError("skeleton extension expects small symmetric necklaces");
    }
    NecklaceBundle bundle = partial;
    for (int k = 3; k <= bundle.base.dimension(); ++k)
        for (const Simplex& s : bundle.base.simplices(k))
            bundle.necklaces[s] = merge_over(bundle, s);
    bundle.next_bead_id = max_bead_id(bundle) + 1;
    return bundle;
}

NecklaceBundle build_general(const SimplicialComplex& b, const Cochain& a,
                             bool* h2_two_torsion) {
    if (!is_orientation_cochain(b, a))
        throw ValidationError("expected a ±1-valued 1-cochain on all edges of the base");
    if (b.dimension() >= 3) {
        Cochain f = apply_F(coboundary(b, a));
        Cochain df = coboundary(b, f);
        std::vector<std::string> bad;
        for (const auto& [s, v] : df.values)
            if (!v.is_zero()) bad.push_back(simplex_key(s));
        if (!bad.empty()) {
            std::string msg = "F(da) is not a cocycle; d(F(da)) != 0 on";
            for (const auto& k : bad) msg += " [" + k + "]";
            throw ObstructionError(msg);
        }
    }
    NecklaceBundle bundle = extend_to_skeleton(small_skeleton_bundle(b, a));
    double_bold_beads(bundle);
    if (h2_two_torsion) *h2_two_torsion = h2_has_two_torsion(b);
    return bundle;
}

} // namespace fiberforge
