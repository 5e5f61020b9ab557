#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "fiberforge/complex.hpp"

namespace fiberforge {

using BigInt = boost::multiprecision::cpp_int;

// Dense exact-integer matrix, row major.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> data;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    BigInt& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static IntegerMatrix identity(std::size_t n);
    IntegerMatrix transpose() const;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

// Determinant by fraction-free (Bareiss) elimination; used to certify
// unimodularity of the transforms in tests.
BigInt determinant(const IntegerMatrix& m);

struct SmithResult {
    IntegerMatrix d;                // u * m * v = d, diagonal
    IntegerMatrix u;                // unimodular, rows x rows
    IntegerMatrix v;                // unimodular, cols x cols
    std::vector<BigInt> diagonal;   // nonzero invariant factors, each dividing the next

    std::size_t rank() const { return diagonal.size(); }
};

// Smith normal form over the integers with least-absolute-value pivoting;
// exact arbitrary-precision arithmetic throughout.
SmithResult smith_normal_form(const IntegerMatrix& m);

struct HomologyGroup {
    long long betti = 0;
    std::vector<BigInt> torsion;    // coefficients > 1, divisibility chain
};

// Boundary matrix of the chain complex: rows indexed by the (k-1)-simplices,
// columns by the k-simplices, with alternating signs on sorted tuples.
IntegerMatrix boundary_matrix(const SimplicialComplex& x, int k);

// H_k(X; Z) via Smith normal forms of the boundary matrices.
HomologyGroup homology(const SimplicialComplex& x, int k);

// Whether H^2(X; Z) contains an element of order two, read off the invariant
// factors of the degree-1 coboundary matrix (the transpose of the boundary).
bool h2_has_two_torsion(const SimplicialComplex& x);

// "0", "Z", "Z^2 + Z/2 + Z/6" style rendering.
std::string homology_to_string(const HomologyGroup& h);

} // namespace fiberforge
