#include "fiberforge/necklace.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fiberforge {

long long Necklace::count_color(int color) const {
    long long n = 0;
    for (const Bead& b : beads)
        if (b.color == color) ++n;
    return n;
}

std::size_t Necklace::index_of(BeadId id) const {
    for (std::size_t i = 0; i < beads.size(); ++i)
        if (beads[i].id == id) return i;
    throw InternalError("bead " + std::to_string(id) + " not found in necklace over " +
                        simplex_key(carrier));
}

const Bead& Necklace::bead(BeadId id) const { return beads[index_of(id)]; }

const Bead& Necklace::color_successor(BeadId id) const {
    std::size_t i = index_of(id);
    int color = beads[i].color;
    for (std::size_t step = 1; step <= beads.size(); ++step) {
        const Bead& cand = beads[(i + step) % beads.size()];
        if (cand.color == color) return cand;
    }
    throw InternalError("no color successor");
}

bool Necklace::has_framing() const {
    std::map<int, int> bold_counts;
    for (int v : carrier) bold_counts[v] = 0;
    for (const Bead& b : beads) {
        if (!bold_counts.count(b.color)) return false;
        if (b.bold) ++bold_counts[b.color];
    }
    for (const auto& [v, n] : bold_counts)
        if (n != 1) return false;
    return true;
}

bool Necklace::is_small_symmetric() const {
    for (int v : carrier)
        if (count_color(v) != 2) return false;
    if (beads.size() != 2 * carrier.size()) return false;
    std::size_t half = beads.size() / 2;
    for (std::size_t i = 0; i < half; ++i)
        if (beads[i].color != beads[i + half].color) return false;
    return true;
}

BeadId Necklace::bold_bead(int color) const {
    for (const Bead& b : beads)
        if (b.color == color && b.bold) return b.id;
    throw InternalError("no bold bead of color " + std::to_string(color));
}

Necklace restrict_necklace(const Necklace& n, const Simplex& face) {
    if (!is_valid_simplex(face) || !is_face_of(face, n.carrier))
        throw ValidationError("restriction target " + simplex_key(face) +
                              " is not a face of " + simplex_key(n.carrier));
    Necklace out;
    out.carrier = face;
    for (const Bead& b : n.beads)
        if (std::binary_search(face.begin(), face.end(), b.color)) out.beads.push_back(b);
    return out;
}

Necklace canonical_form(const Necklace& n) {
    if (n.beads.empty()) return n;
    const std::size_t len = n.beads.size();
    std::size_t best = 0;
    auto less_rotation = [&](std::size_t r, std::size_t s) {
        // compare color words, then id words
        for (std::size_t i = 0; i < len; ++i) {
            int cr = n.beads[(r + i) % len].color;
            int cs = n.beads[(s + i) % len].color;
            if (cr != cs) return cr < cs;
        }
        for (std::size_t i = 0; i < len; ++i) {
            BeadId ir = n.beads[(r + i) % len].id;
            BeadId is = n.beads[(s + i) % len].id;
            if (ir != is) return ir < is;
        }
        return false;
    };
    for (std::size_t r = 1; r < len; ++r)
        if (less_rotation(r, best)) best = r;
    Necklace out;
    out.carrier = n.carrier;
    for (std::size_t i = 0; i < len; ++i) out.beads.push_back(n.beads[(best + i) % len]);
    return out;
}

bool cyclically_equal(const Necklace& a, const Necklace& b) {
    if (a.carrier != b.carrier || a.beads.size() != b.beads.size()) return false;
    if (a.beads.empty()) return true;
    for (std::size_t shift = 0; shift < b.beads.size(); ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < a.beads.size(); ++i) {
            if (!(a.beads[i] == b.beads[(i + shift) % b.beads.size()])) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

ClassicalCheck check_classical(const Necklace& n) {
    for (int v : n.carrier) {
        if (n.count_color(v) < 3)
            return {false, "color " + std::to_string(v) + " has fewer than 3 beads"};
    }
    std::set<int> colors;
    for (const Bead& b : n.beads) colors.insert(b.color);
    if (colors.size() == 2) {
        // two monochromatic blocks <=> exactly two color changes around the circle
        int changes = 0;
        for (std::size_t i = 0; i < n.beads.size(); ++i)
            if (n.beads[i].color != n.at(i + 1).color) ++changes;
        if (changes == 2)
            return {false, "two-colored necklace splits into two monochromatic blocks"};
    }
    return {true, ""};
}

DirectedEdge framing_to_orientation(const Necklace& n) {
    if (n.carrier.size() != 2)
        throw ValidationError("framing_to_orientation expects a necklace over an edge");
    if (!n.has_framing())
        throw ValidationError("necklace over " + simplex_key(n.carrier) +
                              " carries no framing");
    int i = n.carrier[0], j = n.carrier[1];
    std::size_t start = n.index_of(n.bold_bead(i));
    for (std::size_t step = 1; step <= n.beads.size(); ++step) {
        const Bead& b = n.at(start + step);
        if (b.color == j) return b.bold ? DirectedEdge{i, j} : DirectedEdge{j, i};
    }
    throw InternalError("two-colored necklace without second color");
}

namespace {

// All sixteen framed small symmetric words over local colors (0,1,2): the two
// cyclic color patterns times eight bold choices.  Grouped by the directions
// they induce; each direction triple is realized by exactly one necklace up
// to rotation.
struct PatternEntry {
    std::array<int, 6> colors;
    std::array<bool, 6> bold;
};

std::array<bool, 3> induced_directions(const PatternEntry& p) {
    Necklace n;
    n.carrier = {0, 1, 2};
    for (int i = 0; i < 6; ++i)
        n.beads.push_back({i, p.colors[static_cast<std::size_t>(i)],
                           p.bold[static_cast<std::size_t>(i)]});
    std::array<bool, 3> ascending{};
    const std::array<std::pair<int, int>, 3> edges = {{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t k = 0; k < 3; ++k) {
        Necklace e = restrict_necklace(n, {edges[k].first, edges[k].second});
        DirectedEdge d = framing_to_orientation(e);
        ascending[k] = d.from < d.to;
    }
    return ascending;
}

const std::array<PatternEntry, 8>& direction_table() {
    static const std::array<PatternEntry, 8> table = [] {
        std::array<PatternEntry, 8> result{};
        std::array<bool, 8> filled{};
        const std::array<std::array<int, 6>, 2> words = {{{0, 1, 2, 0, 1, 2},
                                                          {0, 2, 1, 0, 2, 1}}};
        for (const auto& word : words) {
            // choose which of the two beads of each color is bold
            for (int mask = 0; mask < 8; ++mask) {
                PatternEntry p{};
                p.colors = word;
                std::array<int, 3> seen{};
                for (std::size_t i = 0; i < 6; ++i) {
                    int c = word[i];
                    bool first = seen[static_cast<std::size_t>(c)] == 0;
                    ++seen[static_cast<std::size_t>(c)];
                    bool bold_first = (mask >> c) & 1;
                    p.bold[i] = first == bold_first;
                }
                auto dir = induced_directions(p);
                std::size_t key = static_cast<std::size_t>(dir[0]) |
                                  static_cast<std::size_t>(dir[1]) << 1 |
                                  static_cast<std::size_t>(dir[2]) << 2;
                if (!filled[key]) {
                    filled[key] = true;
                    result[key] = p;
                }
            }
        }
        for (bool f : filled)
            if (!f) throw InternalError("framed necklace direction table incomplete");
        return result;
    }();
    return table;
}

} // namespace

Necklace small_necklace_for_directions(const Simplex& triangle,
                                       const std::array<bool, 3>& ascending) {
    if (triangle.size() != 3 || !is_valid_simplex(triangle))
        throw ValidationError("small necklaces require a triangle carrier");
    std::size_t key = static_cast<std::size_t>(ascending[0]) |
                      static_cast<std::size_t>(ascending[1]) << 1 |
                      static_cast<std::size_t>(ascending[2]) << 2;
    const PatternEntry& p = direction_table()[key];
    Necklace n;
    n.carrier = triangle;
    for (std::size_t i = 0; i < 6; ++i) {
        int v = triangle[static_cast<std::size_t>(p.colors[i])];
        n.beads.push_back({2LL * v + (p.bold[i] ? 0 : 1), v, p.bold[i]});
    }
    return canonical_form(n);
}

Necklace small_framed_necklace(const std::array<int, 3>& oriented_triangle,
                               const std::array<int, 3>& edge_signs) {
    Simplex t = make_simplex({oriented_triangle[0], oriented_triangle[1],
                              oriented_triangle[2]});
    for (int s : edge_signs)
        if (s != 1 && s != -1)
            throw ValidationError("edge signs must be ±1");
    std::array<bool, 3> ascending{};
    const std::array<std::pair<int, int>, 3> local_edges = {
        {{0, 1}, {0, 2}, {1, 2}}}; // positions in the sorted triangle
    // direction of each oriented-triangle edge, then re-keyed by sorted pairs
    std::map<std::pair<int, int>, bool> asc;
    const std::array<std::pair<int, int>, 3> oriented_edges = {
        {{oriented_triangle[0], oriented_triangle[1]},
         {oriented_triangle[1], oriented_triangle[2]},
         {oriented_triangle[2], oriented_triangle[0]}}};
    for (std::size_t k = 0; k < 3; ++k) {
        auto [from, to] = oriented_edges[k];
        if (edge_signs[k] < 0) std::swap(from, to);
        asc[{std::min(from, to), std::max(from, to)}] = from < to;
    }
    for (std::size_t k = 0; k < 3; ++k) {
        int u = t[static_cast<std::size_t>(local_edges[k].first)];
        int v = t[static_cast<std::size_t>(local_edges[k].second)];
        ascending[k] = asc.at({u, v});
    }
    return small_necklace_for_directions(t, ascending);
}

} // namespace fiberforge
