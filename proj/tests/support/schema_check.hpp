#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace k25::testing {

/// Validates a document against the subset of JSON Schema the repository's
/// schema files use: type (string or list), properties, required,
/// additionalProperties (boolean), items (single schema), enum, and $ref
/// into #/definitions. Returns human-readable violations; empty = valid.
std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                           const nlohmann::json& document);

/// Loads the schema file and validates; violations are prefixed with the
/// schema path for readable assertions.
std::vector<std::string> validate_against_schema_file(const std::string& schema_path,
                                                      const nlohmann::json& document);

} // namespace k25::testing
