#pragma once

#include <string>
#include <string_view>

#include "matroid/core.hpp"

namespace matroid {

/// Builds a matroid from a JSON spec document. Accepted "type" values:
/// "linear" {field, matrix}, "graphic" {edges}, "circuits" {n, circuits},
/// "name" {name}, "dual_of" {of}, "two_sum" {left, left_basepoint, right,
/// right_basepoint}. Nested specs may go at most 4 levels deep.
/// Throws std::runtime_error / std::invalid_argument on malformed input.
Matroid parse_spec(const std::string& json_text);

/// Reads the file and parses it as a spec.
Matroid load_spec_file(const std::string& path);

/// Resolves an argument as a catalog name first (case-insensitive), then as
/// a spec file path.
Matroid resolve_matroid_arg(const std::string& arg);

/// Serializes a matroid in "circuits" form, suitable for round-tripping
/// through parse_spec.
std::string serialize_spec(const Matroid& m);

}  // namespace matroid
