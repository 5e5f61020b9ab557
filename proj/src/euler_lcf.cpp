#include "fiberforge/euler_lcf.hpp"

#include <algorithm>

namespace fiberforge {

LcfEntry lcf_entry(const Necklace& n, const std::array<int, 3>& color_order) {
    {
        std::array<int, 3> sorted = color_order;
        std::sort(sorted.begin(), sorted.end());
        if (Simplex(sorted.begin(), sorted.end()) != n.carrier)
            throw ValidationError("color order does not match the necklace carrier " +
                                  simplex_key(n.carrier));
    }
    const std::size_t len = n.beads.size();
    std::vector<std::size_t> of0, of1, of2;
    for (std::size_t i = 0; i < len; ++i) {
        int c = n.beads[i].color;
        if (c == color_order[0]) of0.push_back(i);
        else if (c == color_order[1]) of1.push_back(i);
        else of2.push_back(i);
    }
    LcfEntry e;
    e.triples = static_cast<long long>(of0.size()) * static_cast<long long>(of1.size()) *
                static_cast<long long>(of2.size());
    if (e.triples == 0)
        throw ValidationError("necklace over " + simplex_key(n.carrier) +
                              " misses a color");
    for (std::size_t p0 : of0) {
        for (std::size_t p1 : of1) {
            for (std::size_t p2 : of2) {
                // distance counterclockwise from p0
                std::size_t d1 = (p1 + len - p0) % len;
                std::size_t d2 = (p2 + len - p0) % len;
                if (d1 < d2) ++e.positive;
                else ++e.negative;
            }
        }
    }
    e.value = Rational(e.negative - e.positive, 2 * e.triples);
    return e;
}

Rational lcf_value(const Necklace& n, const std::array<int, 3>& color_order) {
    return lcf_entry(n, color_order).value;
}

LcfResult lcf_report(const NecklaceBundle& bundle) {
    LcfResult result;
    result.cochain.degree = 2;
    result.surface = is_closed_oriented_surface(bundle.base);
    SurfaceOrientation orientation;
    if (result.surface) {
        orientation = verify_closed_oriented_surface(bundle.base);
        result.cochain.convention = CochainConvention::surface_canonical;
    } else {
        result.cochain.convention = CochainConvention::sorted_tuple;
    }
    for (const Simplex& t : bundle.base.simplices(2)) {
        std::array<int, 3> order = result.surface
                                       ? orientation.oriented_triangle(t)
                                       : std::array<int, 3>{t[0], t[1], t[2]};
        LcfEntry e = lcf_entry(bundle.necklace(t), order);
        result.sum += e.value;
        result.cochain.values[t] = e.value;
        result.entries[t] = std::move(e);
    }
    return result;
}

long long euler_number(const NecklaceBundle& bundle) {
    verify_closed_oriented_surface(bundle.base);
    LcfResult r = lcf_report(bundle);
    if (!r.sum.is_integer())
        throw ValidationError("LCF sum " + r.sum.to_string() +
                              " is not an integer; the bundle is inconsistent");
    return r.sum.numerator();
}

} // namespace fiberforge
