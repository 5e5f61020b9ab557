#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fiberforge/errors.hpp"

namespace fiberforge {

// A simplex is a strictly increasing vector of dense vertex indices.
using Simplex = std::vector<int>;

// f-vector: counts[k] = number of k-simplices.
using FVector = std::vector<long long>;

Simplex make_simplex(std::vector<int> vertices);
bool is_valid_simplex(const Simplex& s);
bool is_face_of(const Simplex& face, const Simplex& s);
std::string simplex_key(const Simplex& s);            // "0,1,2"
Simplex parse_simplex_key(const std::string& key);

// All nonempty proper subsets of s, sorted lexicographically.
std::vector<Simplex> proper_faces(const Simplex& s);

// Finite abstract simplicial complex, closed under taking faces.
// Vertices are dense integers 0..vertex_count()-1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Downward closure of the given simplices.  vertex_count_hint may exceed
    // the largest index used; the extra indices become isolated vertices.
    static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal,
                                          int vertex_count_hint = 0);

    int vertex_count() const { return vertex_count_; }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    // k-simplices in lexicographic order; empty for k out of range.
    const std::vector<Simplex>& simplices(int k) const;
    long long count(int k) const;
    bool contains(const Simplex& s) const { return all_.count(s) > 0; }

    std::vector<Simplex> all_simplices() const;            // by dim, then lex
    std::vector<Simplex> maximal_simplices() const;
    std::vector<Simplex> star(int vertex) const;           // simplices containing vertex

    FVector f_vector() const;
    long long euler_characteristic() const;
    bool is_connected() const;                             // via edges, on vertices

private:
    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::set<Simplex> all_;
};

} // namespace fiberforge
