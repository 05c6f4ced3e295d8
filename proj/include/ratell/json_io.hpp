#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ratell/certificate.hpp"
#include "ratell/hodge_e.hpp"
#include "ratell/spaces.hpp"
#include "ratell/thresholds.hpp"

namespace ratell {

using Json = nlohmann::json;

// Serialization conventions, identical everywhere:
//   Rational            "p/q" or "p" (exact decimal strings)
//   UniPoly             [[degree, "num", "den"], ...] in increasing degree
//   TriPoly             [[k, p, q, "num", "den"], ...] in (k, p, q) lex order
//   EFunction           [[p, q, "num", "den"], ...] (t column dropped)
//   Int                 decimal string
// Key order inside objects is lexicographic (the JSON type is map-backed),
// so dumps are byte-identical across runs.
Json to_json(const Rational& r);
Json to_json(const UniPoly& p);
Json to_json(const TriPoly& p);
Json to_json(const EFunction& e);

Json to_json(const Interval& iv);
Json to_json(const Box& box);
Json to_json(const Witness& w);
Json to_json(const RayCertificate& c);
Json to_json(const BoxCertificate& c);

// formal_dim is included for self-contained reports (it is derived data and
// is ignored by the loader).
Json to_json(const EllipticSpace& X);
Json to_json(const ValidationReport& r);
Json to_json(const HilaliResult& r);
Json to_json(const ThresholdReport& r, bool include_certificates = true);
Json to_json(const UpperBoundReport& r);
Json to_json(const FibrationCheck& r);

// Inverses for the polynomial and space formats (bit-exact round-trip).
// All throw MalformedInputError on shape or number-format violations.
Rational rational_from_json(const Json& j);
UniPoly unipoly_from_json(const Json& j);
TriPoly tripoly_from_json(const Json& j);

// Space-definition document:
//   { "name": string, "p_pi": UniPoly, "p_coh": UniPoly,
//     "mh_pi": TriPoly | null, "mh_coh": TriPoly | null }
// The mh keys may also be absent.  Every EllipticSpace invariant is
// enforced (InvariantViolationError); the arithmetic constraints of
// validate_structure are then reported as warnings, since user spaces may
// be hypothetical.  Poincaré duality (check f) can be upgraded to a hard
// rejection by policy for callers ingesting spaces claimed to be closed
// manifolds.
struct LoadPolicy {
    bool enforce_poincare_duality = false;
};

struct LoadedSpace {
    EllipticSpace space;
    std::vector<std::string> warnings;
};

LoadedSpace parse_space(const std::string& json_text, const LoadPolicy& policy = {});

}  // namespace ratell
