#pragma once

#include <json.hpp>

#include "fiberforge/bundle.hpp"
#include "fiberforge/cochain.hpp"
#include "fiberforge/complex.hpp"
#include "fiberforge/euler_lcf.hpp"
#include "fiberforge/game.hpp"
#include "fiberforge/homology.hpp"
#include "fiberforge/necklace.hpp"
#include "fiberforge/total_space.hpp"

namespace fiberforge {

using Json = nlohmann::json;

// Complex: {"vertices": N, "maximal_simplices": [[...], ...]}
Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

// Cochain: {"degree": k, "convention": "...", "values": {"0,1": "p/q", ...}}
// ("convention" defaults to sorted_tuple on read).
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j);

// Necklace: {"carrier": [...], "beads": [{"id":n,"color":v,"bold":b}, ...]}
Json necklace_to_json(const Necklace& n);
Necklace necklace_from_json(const Json& j);

// Bundle: {"base": <complex>, "necklaces": {"0,1,2": <necklace>, ...}}
Json bundle_to_json(const NecklaceBundle& b);
NecklaceBundle bundle_from_json(const Json& j);

// Total space: complex JSON + {"projection": {"0": 0, ...}}
Json total_space_to_json(const TotalSpace& t);

// LCF report with exact rational strings per triangle.
Json lcf_report_to_json(const LcfResult& r);

// Homology: {"betti": n, "torsion": ["2", ...]}
Json homology_to_json(const HomologyGroup& h);

// Game pieces.
Json strategy_to_json(const Strategy& s);
Strategy strategy_from_json(const Json& j);
Json certificate_to_json(const SimplicialComplex& base, const EulerBoundCertificate& c);

// Parses text as JSON with a ValidationError on failure.
Json parse_json(const std::string& text);

} // namespace fiberforge
