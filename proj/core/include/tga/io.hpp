#pragma once

#include <string>

#include <json.hpp>

#include "tga/cocycle.hpp"
#include "tga/rigidity.hpp"
#include "tga/valuation.hpp"

namespace tga {

using Json = nlohmann::ordered_json;

// Wraps nlohmann parsing; throws Error("ParseError") with byte position.
Json parse_json(const std::string& text);

// {"order": n, "mul": [[...], ...]}
GroupTable group_from_json(const Json& j);
Json group_to_json(const GroupTable& g);

// {"orders": [...], "power": {"i": [gen,exp,...]}, "conj": {"j,i": [...]}};
// generator indices are 1-based in the serialized form.
PcPresentation presentation_from_json(const Json& j);
Json presentation_to_json(const PcPresentation& p);

// deterministic monomial text: "1", or "*"-joined "z^a" and "ti^e" parts
std::string monomial_to_string(const Monomial& m);
Monomial monomial_from_string(const std::string& s, long m, size_t n);

Json verdict_to_json(const LambdaVerdict& v);
LambdaVerdict verdict_from_json(const Json& j);

// {"field": {"m":…, "N":…}, "orders": […], "power": {…}, "conj": {…},
//  "power_values": {…}, "conj_values": {…}, "claims": […]}
Json recipe_to_json(const Recipe& r);
Recipe recipe_from_json(const Json& j);

Json value_group_to_json(const ValueGroupResult& vg, const TtrCertificate& cert);
Json record_to_json(const InvariantRecord& rec);
Json comparison_to_json(const InvariantRecord& a, const InvariantRecord& b,
                        const ComparisonResult& r);

// generator-relation notation for a twisted presentation
std::string recipe_to_latex(const Recipe& r);

}  // namespace tga
