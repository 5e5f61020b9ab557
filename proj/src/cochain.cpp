#include "fiberforge/cochain.hpp"

#include <algorithm>
#include <cstdint>

namespace fiberforge {

Cochain zero_cochain(const SimplicialComplex& b, int degree,
                     CochainConvention convention) {
    Cochain c;
    c.degree = degree;
    c.convention = convention;
    for (const Simplex& s : b.simplices(degree)) c.values[s] = Rational(0);
    return c;
}

void validate_cochain(const SimplicialComplex& b, const Cochain& c) {
    const auto& level = b.simplices(c.degree);
    if (c.values.size() != level.size())
        throw ValidationError("cochain of degree " + std::to_string(c.degree) +
                              " has " + std::to_string(c.values.size()) +
                              " values but the complex has " +
                              std::to_string(level.size()) + " simplices");
    for (const Simplex& s : level)
        if (!c.values.count(s))
            throw ValidationError("cochain misses a value on " + simplex_key(s));
}

Cochain coboundary(const SimplicialComplex& b, const Cochain& c) {
    validate_cochain(b, c);
    if (c.convention != CochainConvention::sorted_tuple)
        throw ValidationError("coboundary expects the sorted_tuple convention");
    if (c.degree + 1 > b.dimension())
        throw ValidationError("coboundary degree " + std::to_string(c.degree + 1) +
                              " exceeds the dimension of the complex");
    Cochain d;
    d.degree = c.degree + 1;
    d.convention = CochainConvention::sorted_tuple;
    for (const Simplex& s : b.simplices(c.degree + 1)) {
        Rational total(0);
        long long sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            total += Rational(sign) * c.at(face);
            sign = -sign;
        }
        d.values[s] = total;
    }
    return d;
}

Cochain convert_convention(const SimplicialComplex& b, const Cochain& c,
                           CochainConvention target) {
    if (c.degree != 2)
        throw ValidationError("orientation conventions only differ in degree 2");
    if (c.convention == target) return c;
    SurfaceOrientation orientation = verify_closed_oriented_surface(b);
    Cochain out = c;
    out.convention = target;
    for (auto& [s, v] : out.values)
        if (orientation.sign(s) < 0) v = -v;
    return out;
}

bool is_orientation_cochain(const SimplicialComplex& b, const Cochain& c) {
    if (c.degree != 1) return false;
    try {
        validate_cochain(b, c);
    } catch (const ValidationError&) {
        return false;
    }
    for (const auto& [e, v] : c.values)
        if (v != Rational(1) && v != Rational(-1)) return false;
    return true;
}

Rational apply_F_value(const Rational& v) {
    if (v == Rational(3) || v == Rational(-1)) return Rational(1, 4);
    if (v == Rational(-3) || v == Rational(1)) return Rational(-1, 4);
    throw ValidationError("F is only defined on values in {3, 1, -1, -3}, got " +
                          v.to_string());
}

Cochain apply_F(const Cochain& c) {
    if (c.degree != 2)
        throw ValidationError("F applies to degree-2 cochains");
    Cochain out = c;
    for (auto& [s, v] : out.values) v = apply_F_value(v);
    return out;
}

Cochain g_of_a(const SimplicialComplex& b, const Cochain& a) {
    if (!is_orientation_cochain(b, a))
        throw ValidationError("g_of_a expects a ±1-valued 1-cochain on all edges");
    Cochain da = coboundary(b, a);
    Cochain g = apply_F(da);
    for (auto& [s, v] : g.values) v -= Rational(3, 4) * da.at(s);
    return g;
}

Rational surface_sum(const SimplicialComplex& b, const Cochain& c) {
    if (c.degree != 2)
        throw ValidationError("surface_sum expects a degree-2 cochain");
    Cochain canonical = c.convention == CochainConvention::surface_canonical
                            ? c
                            : convert_convention(b, c, CochainConvention::surface_canonical);
    Rational total(0);
    for (const auto& [s, v] : canonical.values) total += v;
    return total;
}

Cochain choose_target_cochain(const SimplicialComplex& b, long long euler) {
    verify_closed_oriented_surface(b);
    const long long f = b.count(2);
    if (f < 4 * std::abs(euler))
        throw ObstructionError("f(B)=" + std::to_string(f) + " < 4|E|=" +
                               std::to_string(4 * std::abs(euler)));
    const long long plus = f / 2 + 2 * euler;
    Cochain target;
    target.degree = 2;
    target.convention = CochainConvention::surface_canonical;
    long long i = 0;
    for (const Simplex& t : b.simplices(2)) {
        target.values[t] = i < plus ? Rational(1, 4) : Rational(-1, 4);
        ++i;
    }
    return target;
}

namespace {

// Row of the GF(2) system: bit per edge plus a right-hand side.
struct Gf2Row {
    std::vector<std::uint64_t> bits;
    int rhs = 0;

    void flip(std::size_t col) { bits[col >> 6] ^= 1ULL << (col & 63); }
    bool test(std::size_t col) const { return (bits[col >> 6] >> (col & 63)) & 1; }
    void add(const Gf2Row& o) {
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] ^= o.bits[i];
        rhs ^= o.rhs;
    }
    bool lhs_empty() const {
        for (std::uint64_t w : bits)
            if (w) return false;
        return true;
    }
};

} // namespace

Cochain solve_orientation_for_target(const SimplicialComplex& b, const Cochain& target,
                                     const Simplex& sigma0) {
    SurfaceOrientation orientation = verify_closed_oriented_surface(b);
    validate_cochain(b, target);
    if (target.degree != 2 || target.convention != CochainConvention::surface_canonical)
        throw ValidationError("target must be a degree-2 cochain in the "
                              "surface_canonical convention");
    for (const auto& [s, v] : target.values)
        if (v != Rational(1, 4) && v != Rational(-1, 4))
            throw ValidationError("target values must be ±1/4");
    if (!b.contains(sigma0) || sigma0.size() != 3)
        throw ValidationError("sigma0 must be a triangle of the base");

    const auto& edges = b.simplices(1);
    std::map<Simplex, std::size_t> edge_index;
    for (std::size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = i;
    const std::size_t words = (edges.size() + 63) / 64;

    // Unknown x_e = 1 iff a(e) = -1 (edge disagrees with its reference
    // orientation).  A triangle with canonical orientation (v0,v1,v2) has an
    // odd number of agreeing edges iff x_{e01}+x_{e12}+x_{e20} equals the
    // number of its induced directions that descend, mod 2; odd agreement is
    // exactly target = +1/4.
    std::vector<Gf2Row> rows;
    for (const Simplex& t : b.simplices(2)) {
        if (t == sigma0) continue;
        auto ot = orientation.oriented_triangle(t);
        Gf2Row row;
        row.bits.assign(words, 0);
        int descending = 0;
        for (auto [from, to] : {std::pair<int, int>{ot[0], ot[1]},
                                std::pair<int, int>{ot[1], ot[2]},
                                std::pair<int, int>{ot[2], ot[0]}}) {
            if (from > to) ++descending;
            Simplex e = from < to ? Simplex{from, to} : Simplex{to, from};
            row.flip(edge_index.at(e));
        }
        int want_odd = target.at(t) == Rational(1, 4) ? 1 : 0;
        // odd agreement  <=>  sum x = descending + (1 - want_odd) (mod 2)
        row.rhs = (descending + 1 + want_odd) & 1;
        rows.push_back(std::move(row));
    }

    // Gaussian elimination, pivot columns scanned in canonical edge order.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < edges.size() && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].test(col)) rows[r].add(rows[rank]);
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r].rhs && rows[r].lhs_empty())
            throw InternalError("orientation system is inconsistent");

    // Free variables stay 0 (a = +1); pivot variables read off the rhs after
    // full reduction (no free column can be set in a reduced pivot row with
    // them zeroed, so x_pivot = rhs xor the free contributions = rhs).
    std::vector<int> x(edges.size(), 0);
    for (std::size_t r = 0; r < rank; ++r) {
        int value = rows[r].rhs;
        for (std::size_t col = 0; col < edges.size(); ++col) {
            if (col != pivot_col[r] && rows[r].test(col)) value ^= x[col];
        }
        x[pivot_col[r]] = value;
    }

    Cochain a;
    a.degree = 1;
    a.convention = CochainConvention::sorted_tuple;
    for (std::size_t i = 0; i < edges.size(); ++i)
        a.values[edges[i]] = x[i] ? Rational(-1) : Rational(1);
    return a;
}

} // namespace fiberforge
