#include "fiberforge/complex.hpp"

#include <algorithm>
#include <sstream>

namespace fiberforge {

Simplex make_simplex(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0)
            throw ValidationError("negative vertex index in simplex");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw ValidationError("repeated vertex in simplex");
    }
    if (vertices.empty()) throw ValidationError("empty simplex");
    return vertices;
}

bool is_valid_simplex(const Simplex& s) {
    if (s.empty()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

bool is_face_of(const Simplex& face, const Simplex& s) {
    return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

std::string simplex_key(const Simplex& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i];
    }
    return out.str();
}

Simplex parse_simplex_key(const std::string& key) {
    std::vector<int> vertices;
    std::istringstream in(key);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            vertices.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ValidationError("cannot parse simplex key '" + key + "'");
        }
    }
    if (vertices.empty())
        throw ValidationError("cannot parse simplex key '" + key + "'");
    return make_simplex(std::move(vertices));
}

std::vector<Simplex> proper_faces(const Simplex& s) {
    std::vector<Simplex> faces;
    const std::size_t n = s.size();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push_back(s[i]);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal,
                                                  int vertex_count_hint) {
    SimplicialComplex c;
    std::set<Simplex> all;
    int max_vertex = -1;
    for (const Simplex& raw : maximal) {
        Simplex s = make_simplex(raw);
        max_vertex = std::max(max_vertex, s.back());
        // insert s and all faces
        const std::size_t n = s.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            all.insert(std::move(f));
        }
    }
    c.vertex_count_ = std::max(vertex_count_hint, max_vertex + 1);
    for (int v = max_vertex + 1; v < c.vertex_count_; ++v) all.insert(Simplex{v});
    if (c.vertex_count_ == 0)
        throw ValidationError("complex has no vertices");
    for (const Simplex& s : all) {
        int k = static_cast<int>(s.size()) - 1;
        if (k >= static_cast<int>(c.by_dim_.size()))
            c.by_dim_.resize(static_cast<std::size_t>(k) + 1);
        c.by_dim_[static_cast<std::size_t>(k)].push_back(s);
    }
    for (auto& level : c.by_dim_) std::sort(level.begin(), level.end());
    c.all_ = std::move(all);
    return c;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    static const std::vector<Simplex> empty;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[static_cast<std::size_t>(k)];
}

long long SimplicialComplex::count(int k) const {
    return static_cast<long long>(simplices(k).size());
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    for (const auto& level : by_dim_)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (const Simplex& s : all_simplices()) {
        bool maximal = true;
        for (const Simplex& t : simplices(static_cast<int>(s.size()))) {
            if (is_face_of(s, t)) { maximal = false; break; }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

std::vector<Simplex> SimplicialComplex::star(int vertex) const {
    std::vector<Simplex> out;
    for (const Simplex& s : all_simplices())
        if (std::binary_search(s.begin(), s.end(), vertex)) out.push_back(s);
    return out;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    for (const auto& level : by_dim_) f.push_back(static_cast<long long>(level.size()));
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    long long sign = 1;
    for (const auto& level : by_dim_) {
        chi += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return chi;
}

bool SimplicialComplex::is_connected() const {
    if (vertex_count_ == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count_));
    for (const Simplex& e : simplices(1)) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    for (char s : seen) if (!s) return false;
    return true;
}

} // namespace fiberforge
