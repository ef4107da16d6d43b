#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pipeline.hpp"

namespace crosscap {

using Json = nlohmann::ordered_json;

// Integers within the 53-bit safe range are JSON numbers, larger ones decimal
// strings. Parsing accepts either.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json move_to_json(const GeneratorMove& move);
GeneratorMove move_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json trace_to_json(const Trace& trace);
Json certificate_to_json(const Certificate& cert, bool include_trace);
Certificate certificate_from_json(const Json& j);

Json decision_to_json(const Decision& d, bool include_trace);
Json enumeration_to_json(const EnumeratedGroup& g);

// Throws ParseError on malformed text.
Json parse_json(std::string_view text);
std::string dump(const Json& j);

}  // namespace crosscap
