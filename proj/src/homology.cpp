#include "fiberforge/homology.hpp"

#include <algorithm>

namespace fiberforge {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows) throw InternalError("matrix dimension mismatch in multiply");
    IntegerMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

BigInt determinant(const IntegerMatrix& m) {
    if (m.rows != m.cols) throw InternalError("determinant of a non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    IntegerMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Extended gcd: returns g = gcd(a, b) >= 0 and x, y with x*a + y*b = g.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) {
        if (a < 0) {
            x = -1;
            y = 0;
            return -a;
        }
        x = 1;
        y = 0;
        return a;
    }
    BigInt x1, y1;
    BigInt g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

struct SmithWorker {
    IntegerMatrix m, u, v;

    explicit SmithWorker(const IntegerMatrix& input)
        : m(input),
          u(IntegerMatrix::identity(input.rows)),
          v(IntegerMatrix::identity(input.cols)) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    void add_row(std::size_t dst, std::size_t src, const BigInt& factor) { // row dst += f*src
        if (factor == 0) return;
        for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) += factor * m.at(src, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(dst, j) += factor * u.at(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const BigInt& factor) { // col dst += f*src
        if (factor == 0) return;
        for (std::size_t i = 0; i < m.rows; ++i) m.at(i, dst) += factor * m.at(i, src);
        for (std::size_t i = 0; i < v.rows; ++i) v.at(i, dst) += factor * v.at(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
    }
    // rows (a, b) <- (p*a + q*b, r*a + s*b) with p*s - q*r = +-1
    void transform_rows(std::size_t a, std::size_t b, const BigInt& p, const BigInt& q,
                        const BigInt& r, const BigInt& s) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            BigInt top = p * m.at(a, j) + q * m.at(b, j);
            BigInt bottom = r * m.at(a, j) + s * m.at(b, j);
            m.at(a, j) = top;
            m.at(b, j) = bottom;
        }
        for (std::size_t j = 0; j < u.cols; ++j) {
            BigInt top = p * u.at(a, j) + q * u.at(b, j);
            BigInt bottom = r * u.at(a, j) + s * u.at(b, j);
            u.at(a, j) = top;
            u.at(b, j) = bottom;
        }
    }

    // Least-absolute-value nonzero entry of the submatrix [t..)x[t..); false
    // if the submatrix is zero.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        BigInt best;
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j) {
                const BigInt& x = m.at(i, j);
                if (x == 0) continue;
                BigInt a = abs_big(x);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    // Clear row and column t using the pivot at (t, t); smaller remainders
    // become the new pivot until everything divides.
    void reduce_at(std::size_t t) {
        std::size_t pi, pj;
        if (!find_pivot(t, pi, pj)) return;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                BigInt q = m.at(i, t) / m.at(t, t);
                add_row(i, t, -q);
                if (m.at(i, t) != 0) {
                    swap_rows(t, i); // strictly smaller remainder becomes pivot
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                BigInt q = m.at(t, j) / m.at(t, t);
                add_col(j, t, -q);
                if (m.at(t, j) != 0) {
                    swap_cols(t, j);
                    dirty = true;
                }
            }
        }
    }
};

} // namespace

SmithResult smith_normal_form(const IntegerMatrix& input) {
    SmithWorker w(input);
    const std::size_t bound = std::min(input.rows, input.cols);
    std::size_t rank = 0;
    for (std::size_t t = 0; t < bound; ++t) {
        std::size_t pi, pj;
        if (!w.find_pivot(t, pi, pj)) break;
        w.reduce_at(t);
        ++rank;
    }
    for (std::size_t t = 0; t < rank; ++t)
        if (w.m.at(t, t) < 0) w.negate_row(t);

    // Divisibility chain: replace adjacent (a, b) with a not dividing b by
    // (gcd, lcm) through unimodular moves, until the chain holds.
    bool changed = rank > 0;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t + 1 < rank; ++t) {
            const BigInt a = w.m.at(t, t);
            const BigInt b = w.m.at(t + 1, t + 1);
            if (b % a == 0) continue;
            // column t gains the entry b in row t+1
            w.add_col(t, t + 1, 1);
            BigInt x, y;
            BigInt g = ext_gcd(a, b, x, y);
            // rows (t, t+1) <- (x*row_t + y*row_t+1, -(b/g)*row_t + (a/g)*row_t+1),
            // determinant x*(a/g) + y*(b/g) = 1
            w.transform_rows(t, t + 1, x, y, -(b / g), a / g);
            // block is now [[g, y*b], [0, a*b/g]]; g divides y*b = g - x*a
            w.add_col(t + 1, t, -(w.m.at(t, t + 1) / g));
            if (w.m.at(t, t) < 0) w.negate_row(t);
            if (w.m.at(t + 1, t + 1) < 0) w.negate_row(t + 1);
            changed = true;
        }
    }

    SmithResult result;
    result.d = std::move(w.m);
    result.u = std::move(w.u);
    result.v = std::move(w.v);
    for (std::size_t t = 0; t < rank; ++t) result.diagonal.push_back(result.d.at(t, t));
    return result;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& x, int k) {
    if (k < 0) throw ValidationError("boundary matrix needs k >= 0");
    const auto& domain = x.simplices(k);
    const auto& codomain = x.simplices(k - 1);
    IntegerMatrix m(codomain.size(), domain.size());
    if (k == 0) return m; // rows = 0
    for (std::size_t j = 0; j < domain.size(); ++j) {
        const Simplex& s = domain[j];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            auto it = std::lower_bound(codomain.begin(), codomain.end(), face);
            if (it == codomain.end() || *it != face)
                throw InternalError("face missing from complex in boundary matrix");
            std::size_t row = static_cast<std::size_t>(it - codomain.begin());
            m.at(row, j) = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

HomologyGroup homology(const SimplicialComplex& x, int k) {
    if (k < 0) throw ValidationError("homology needs k >= 0");
    HomologyGroup h;
    long long n_k = x.count(k);
    if (n_k == 0) return h;
    std::size_t rank_down = smith_normal_form(boundary_matrix(x, k)).rank();
    SmithResult up = smith_normal_form(boundary_matrix(x, k + 1));
    h.betti = n_k - static_cast<long long>(rank_down) - static_cast<long long>(up.rank());
    for (const BigInt& d : up.diagonal)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

bool h2_has_two_torsion(const SimplicialComplex& x) {
    // delta^1 = transpose of the boundary d_2; torsion of H^2 = its
    // invariant factors > 1.
    IntegerMatrix delta1 = boundary_matrix(x, 2).transpose();
    SmithResult s = smith_normal_form(delta1);
    for (const BigInt& d : s.diagonal)
        if (d > 1 && d % 2 == 0) return true;
    return false;
}

std::string homology_to_string(const HomologyGroup& h) {
    std::vector<std::string> parts;
    if (h.betti == 1) parts.push_back("Z");
    else if (h.betti > 1) parts.push_back("Z^" + std::to_string(h.betti));
    for (const BigInt& d : h.torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

} // namespace fiberforge
