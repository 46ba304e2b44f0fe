#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bdsk/graph.hpp"
#include "bdsk/system.hpp"

namespace bdsk {

inline constexpr int kFormatVersion = 1;

/// Parses a BDS document:
///   {"format_version": 1, "atoms": [...], "labels": [...],
///    "dual_maps": {"<label>": {"<atom>": "<atom>", ...}, ...}}
/// A label missing from dual_maps has the empty map. Throws SchemaError
/// (line/column or field path), UndeclaredIdError or NonFunctionalMapError.
BdsSpec parse_bds(std::string_view text);
/// Canonical document: declaration order, every label present, two-space
/// indentation, trailing newline.
std::string serialize_bds(const BdsSpec& spec);

/// Parses {"vertices": [...], "edges": [{"name", "source", "range"}]}.
GraphSpec parse_graph(std::string_view text);
std::string serialize_graph(const GraphSpec& graph);

/// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string input_digest(const BdsSpec& spec);
std::string input_digest(const GraphSpec& graph);
std::string input_digest(std::string_view text);

/// Reads a whole file; throws SchemaError naming the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace bdsk
