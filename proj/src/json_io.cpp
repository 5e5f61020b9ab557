#include "fiberforge/json_io.hpp"

namespace fiberforge {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError("malformed JSON: " + what);
}

Simplex simplex_from_json(const Json& j) {
    require(j.is_array() && !j.empty(), "simplex must be a non-empty array");
    std::vector<int> vertices;
    for (const auto& v : j) {
        require(v.is_number_integer(), "simplex entries must be integers");
        vertices.push_back(v.get<int>());
    }
    return make_simplex(std::move(vertices));
}

Json simplex_to_json(const Simplex& s) {
    Json j = Json::array();
    for (int v : s) j.push_back(v);
    return j;
}

} // namespace

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ValidationError("input is not valid JSON");
    return j;
}

Json complex_to_json(const SimplicialComplex& c) {
    Json j;
    j["vertices"] = c.vertex_count();
    Json sims = Json::array();
    for (const Simplex& s : c.maximal_simplices()) sims.push_back(simplex_to_json(s));
    j["maximal_simplices"] = std::move(sims);
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    require(j.is_object(), "complex must be an object");
    require(j.contains("maximal_simplices") && j["maximal_simplices"].is_array(),
            "complex needs a maximal_simplices array");
    int vertices = 0;
    if (j.contains("vertices")) {
        require(j["vertices"].is_number_integer(), "vertices must be an integer");
        vertices = j["vertices"].get<int>();
    }
    std::vector<Simplex> maximal;
    for (const auto& s : j["maximal_simplices"]) maximal.push_back(simplex_from_json(s));
    return SimplicialComplex::from_maximal(maximal, vertices);
}

Json cochain_to_json(const Cochain& c) {
    Json j;
    j["degree"] = c.degree;
    j["convention"] = c.convention == CochainConvention::surface_canonical
                          ? "surface_canonical"
                          : "sorted_tuple";
    Json values = Json::object();
    for (const auto& [s, v] : c.values) values[simplex_key(s)] = v.to_string();
    j["values"] = std::move(values);
    return j;
}

Cochain cochain_from_json(const Json& j) {
    require(j.is_object(), "cochain must be an object");
    require(j.contains("degree") && j["degree"].is_number_integer(),
            "cochain needs an integer degree");
    require(j.contains("values") && j["values"].is_object(),
            "cochain needs a values object");
    Cochain c;
    c.degree = j["degree"].get<int>();
    if (j.contains("convention")) {
        require(j["convention"].is_string(), "cochain convention must be a string");
        std::string conv = j["convention"].get<std::string>();
        if (conv == "surface_canonical")
            c.convention = CochainConvention::surface_canonical;
        else if (conv == "sorted_tuple")
            c.convention = CochainConvention::sorted_tuple;
        else
            throw ValidationError("unknown cochain convention '" + conv + "'");
    }
    for (const auto& [key, value] : j["values"].items()) {
        Simplex s = parse_simplex_key(key);
        require(static_cast<int>(s.size()) == c.degree + 1,
                "cochain key " + key + " does not match degree");
        if (value.is_number_integer())
            c.values[s] = Rational(value.get<long long>());
        else if (value.is_string())
            c.values[s] = Rational::parse(value.get<std::string>());
        else
            throw ValidationError("cochain value for " + key +
                                  " must be an integer or a rational string");
    }
    return c;
}

Json necklace_to_json(const Necklace& n) {
    Json j;
    j["carrier"] = simplex_to_json(n.carrier);
    Json beads = Json::array();
    for (const Bead& b : n.beads) {
        Json bead;
        bead["id"] = b.id;
        bead["color"] = b.color;
        bead["bold"] = b.bold;
        beads.push_back(std::move(bead));
    }
    j["beads"] = std::move(beads);
    return j;
}

Necklace necklace_from_json(const Json& j) {
    require(j.is_object(), "necklace must be an object");
    require(j.contains("carrier"), "necklace needs a carrier");
    require(j.contains("beads") && j["beads"].is_array(), "necklace needs a beads array");
    Necklace n;
    n.carrier = simplex_from_json(j["carrier"]);
    for (const auto& b : j["beads"]) {
        require(b.is_object() && b.contains("id") && b.contains("color"),
                "bead needs id and color");
        require(b["id"].is_number_integer() && b["color"].is_number_integer(),
                "bead id and color must be integers");
        require(!b.contains("bold") || b["bold"].is_boolean(),
                "bead bold flag must be a boolean");
        Bead bead;
        bead.id = b["id"].get<long long>();
        bead.color = b["color"].get<int>();
        bead.bold = b.contains("bold") ? b["bold"].get<bool>() : false;
        n.beads.push_back(bead);
    }
    return n;
}

Json bundle_to_json(const NecklaceBundle& b) {
    Json j;
    j["base"] = complex_to_json(b.base);
    Json necklaces = Json::object();
    for (const auto& [s, n] : b.necklaces) necklaces[simplex_key(s)] = necklace_to_json(n);
    j["necklaces"] = std::move(necklaces);
    return j;
}

NecklaceBundle bundle_from_json(const Json& j) {
    require(j.is_object(), "bundle must be an object");
    require(j.contains("base"), "bundle needs a base");
    require(j.contains("necklaces") && j["necklaces"].is_object(),
            "bundle needs a necklaces object");
    NecklaceBundle b;
    b.base = complex_from_json(j["base"]);
    BeadId max_id = -1;
    for (const auto& [key, value] : j["necklaces"].items()) {
        Simplex s = parse_simplex_key(key);
        Necklace n = necklace_from_json(value);
        for (const Bead& bead : n.beads) max_id = std::max(max_id, bead.id);
        b.necklaces.emplace(std::move(s), std::move(n));
    }
    b.next_bead_id = max_id + 1;
    return b;
}

Json total_space_to_json(const TotalSpace& t) {
    Json j = complex_to_json(t.complex);
    Json projection = Json::object();
    for (std::size_t v = 0; v < t.projection.size(); ++v)
        projection[std::to_string(v)] = t.projection[v];
    j["projection"] = std::move(projection);
    return j;
}

Json lcf_report_to_json(const LcfResult& r) {
    Json j;
    Json values = Json::object();
    for (const auto& [s, entry] : r.entries) {
        Json e;
        e["value"] = entry.value.to_string();
        e["positive"] = entry.positive;
        e["negative"] = entry.negative;
        e["triples"] = entry.triples;
        values[simplex_key(s)] = std::move(e);
    }
    j["triangles"] = std::move(values);
    j["surface"] = r.surface;
    if (r.surface) {
        j["sum"] = r.sum.to_string();
        if (r.sum.is_integer()) j["euler_number"] = r.sum.numerator();
    }
    return j;
}

Json homology_to_json(const HomologyGroup& h) {
    Json j;
    j["betti"] = h.betti;
    Json torsion = Json::array();
    for (const BigInt& d : h.torsion) torsion.push_back(d.str());
    j["torsion"] = std::move(torsion);
    j["group"] = homology_to_string(h);
    return j;
}

Json strategy_to_json(const Strategy& s) {
    Json j;
    Json initial = Json::array();
    for (int v : s.initial_vertices) initial.push_back(v);
    j["initial_vertices"] = std::move(initial);
    Json moves = Json::array();
    for (const GameMove& m : s.moves) {
        Json mv;
        mv["edge"] = simplex_to_json(m.edge);
        mv["face"] = simplex_to_json(m.face);
        moves.push_back(std::move(mv));
    }
    j["moves"] = std::move(moves);
    return j;
}

Strategy strategy_from_json(const Json& j) {
    require(j.is_object(), "strategy must be an object");
    require(j.contains("initial_vertices") && j["initial_vertices"].is_array(),
            "strategy needs initial_vertices");
    Strategy s;
    for (const auto& v : j["initial_vertices"]) {
        require(v.is_number_integer(), "initial_vertices entries must be integers");
        s.initial_vertices.push_back(v.get<int>());
    }
    if (j.contains("moves")) {
        require(j["moves"].is_array(), "strategy moves must be an array");
        for (const auto& m : j["moves"]) {
            require(m.is_object() && m.contains("edge") && m.contains("face"),
                    "each move needs edge and face");
            GameMove mv;
            mv.edge = simplex_from_json(m["edge"]);
            mv.face = simplex_from_json(m["face"]);
            s.moves.push_back(std::move(mv));
        }
    }
    return s;
}

Json certificate_to_json(const SimplicialComplex& base, const EulerBoundCertificate& c) {
    Json j;
    j["base"] = complex_to_json(base);
    j["strategy"] = strategy_to_json(c.strategy);
    j["green"] = c.green;
    j["euler_bound"] = c.bound;
    return j;
}

} // namespace fiberforge
