#pragma once

#include <json.hpp>

#include "spine/homology.hpp"
#include "spine/scheme.hpp"
#include "spine/whitehead.hpp"

namespace spine {

using Json = nlohmann::json;

constexpr int json_schema_version = 1;

Json word_to_json(const Word& w);
// Throws std::invalid_argument on a malformed document.
Word word_from_json(const Json& j);

Json graph_to_json(const WhiteheadGraph& g);
Json census_to_json(const FaceCensus& c);
Json order_to_json(const GroupOrder& o);
Json bigint_to_json(const BigInt& v);

// scheme.json: vertices, arcs, faces, pairing and basepoints. Arc ends and
// pairing entries refer to vertex names and arc ids.
Json scheme_to_json(const FacePairingScheme& s);
FacePairingScheme scheme_from_json(const Json& j);

Json report_to_json(const ValidationReport& r);

// certificate.json: cell counts, chi, orbit cycles, validation and verdict.
Json certificate_to_json(const FacePairingScheme& s, const ValidationReport& r, const OrbitResult& orbits,
                         const QuotientComplex& q);

}  // namespace spine
