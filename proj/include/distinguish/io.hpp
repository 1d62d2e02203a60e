#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "distinguish/action.hpp"
#include "distinguish/graph.hpp"

namespace distinguish {

using Json = nlohmann::ordered_json;

/// {degree, generators, domain_size, generator_action}. generator_action may
/// be omitted, giving the natural action on the degree points. Throws
/// InputError naming the offending field.
GroupAction parse_action_document(const Json& doc);
Json action_document(const GroupAction& action);

/// {vertices, edges}.
Graph parse_graph_document(const Json& doc);
Json graph_document(const Graph& g);

/// Parses text as JSON, throwing InputError with the line and column of a
/// syntax error.
Json parse_json_text(const std::string& text, const std::string& source);

/// FNV-1a of the compact serialization, as 16 hex digits.
std::string digest(const Json& doc);

}  // namespace distinguish
