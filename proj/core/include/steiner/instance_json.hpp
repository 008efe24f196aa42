#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steiner/instance.hpp"

namespace steiner {

/// Instance file contents. One schema serves both problem families:
///   {"n": int, "edges": [[u, v, cost?], ...], "root": int?,
///    "groups": [[int, ...], ...], "bounds": [int, ...]?,
///    "terminals": [int, ...]?, "k": int?, "cover_threshold": int?}
/// Unknown fields are rejected; a missing edge cost means 1.
struct ParsedInstance {
  Graph graph;
  std::optional<std::vector<std::vector<int>>> groups;
  std::optional<int> root;
  std::vector<int> bounds;
  std::optional<std::vector<int>> terminals;
  std::optional<int> k;
  std::optional<int> cover_threshold;

  GstInstance to_gst() const;     // throws if no groups
  KTreeInstance to_ktree() const; // throws if no terminals / k
  bool has_groups() const { return groups.has_value(); }
  bool has_terminals() const { return terminals.has_value() && k.has_value(); }
};

/// Parses the JSON text above; throws std::invalid_argument with a message
/// naming the offending field.
ParsedInstance parse_instance_json(const std::string& text);

std::string gst_to_json(const GstInstance& instance);
std::string ktree_to_json(const KTreeInstance& instance);

}  // namespace steiner
