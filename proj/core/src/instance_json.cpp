#include "steiner/instance_json.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <json.hpp>

namespace steiner {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Costs are exact rationals; JSON numbers are accepted as integers or
// decimals with at most 6 fractional digits.
Rational parse_cost(const json& j) {
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    if (v < 0) throw std::invalid_argument("edge cost must be nonnegative");
    return Rational(v);
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v < 0) throw std::invalid_argument("edge cost must be nonnegative");
    const double scaled = v * 1e6;
    const double rounded = std::llround(scaled);
    if (std::abs(scaled - rounded) > 1e-6)
      throw std::invalid_argument("edge cost has more than 6 decimal digits");
    return Rational(static_cast<std::int64_t>(rounded), 1000000);
  }
  throw std::invalid_argument("edge cost must be a number");
}

std::vector<int> parse_int_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument(std::string(what) + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

json cost_to_json(const Rational& c) {
  if (c.is_integer()) return json(c.num);
  return json(c.to_double());
}

}  // namespace

GstInstance ParsedInstance::to_gst() const {
  if (!groups) throw std::invalid_argument("instance has no groups");
  GstInstance inst;
  inst.graph = graph;
  inst.groups = *groups;
  inst.root = root;
  inst.bounds = bounds;
  inst.cover_threshold = cover_threshold.value_or(0);
  inst.canonicalize_groups();
  return inst;
}

KTreeInstance ParsedInstance::to_ktree() const {
  if (!terminals || !k) throw std::invalid_argument("instance has no terminals/k");
  KTreeInstance inst;
  inst.graph = graph;
  inst.terminals = *terminals;
  inst.k = *k;
  return inst;
}

ParsedInstance parse_instance_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("instance file must be a JSON object");

  static const char* known[] = {"n",      "edges",     "root", "groups",
                                "bounds", "terminals", "k",    "cover_threshold"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* name : known) ok = ok || key == name;
    if (!ok) throw std::invalid_argument("unknown field \"" + key + "\"");
  }

  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("field \"n\" (integer) is required");
  const int n = j["n"].get<int>();

  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    for (const auto& row : j["edges"]) {
      if (!row.is_array() || row.size() < 2 || row.size() > 3)
        throw std::invalid_argument("each edge must be [u, v] or [u, v, cost]");
      Edge e;
      e.u = row[0].get<int>();
      e.v = row[1].get<int>();
      e.cost = row.size() == 3 ? parse_cost(row[2]) : Rational(1);
      edges.push_back(e);
    }
  }

  ParsedInstance parsed;
  parsed.graph = Graph(n, std::move(edges));
  if (j.contains("root")) parsed.root = j["root"].get<int>();
  if (j.contains("groups")) {
    if (!j["groups"].is_array()) throw std::invalid_argument("\"groups\" must be an array");
    std::vector<std::vector<int>> groups;
    for (const auto& g : j["groups"]) groups.push_back(parse_int_array(g, "group"));
    parsed.groups = std::move(groups);
  }
  if (j.contains("bounds")) parsed.bounds = parse_int_array(j["bounds"], "bounds");
  if (j.contains("terminals")) parsed.terminals = parse_int_array(j["terminals"], "terminals");
  if (j.contains("k")) parsed.k = j["k"].get<int>();
  if (j.contains("cover_threshold")) parsed.cover_threshold = j["cover_threshold"].get<int>();
  return parsed;
}

namespace {

ordered_json graph_to_json(const Graph& g) {
  ordered_json out = ordered_json::object();
  out["n"] = g.node_count();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) {
    if (e.cost == Rational(1)) {
      edges.push_back({e.u, e.v});
    } else {
      edges.push_back({e.u, e.v, cost_to_json(e.cost)});
    }
  }
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace

std::string gst_to_json(const GstInstance& instance) {
  ordered_json out = graph_to_json(instance.graph);
  if (instance.root) out["root"] = *instance.root;
  out["groups"] = instance.groups;
  if (!instance.bounds.empty()) out["bounds"] = instance.bounds;
  if (instance.cover_threshold > 0) out["cover_threshold"] = instance.cover_threshold;
  return out.dump(2) + "\n";
}

std::string ktree_to_json(const KTreeInstance& instance) {
  ordered_json out = graph_to_json(instance.graph);
  out["terminals"] = instance.terminals;
  out["k"] = instance.k;
  return out.dump(2) + "\n";
}

}  // namespace steiner
