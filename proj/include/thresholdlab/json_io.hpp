// JSON wire formats: graphs ship {num_vertices, edges, roles}, traces ship
// {k, seed, converted, steps}, probabilities ship exact numerator and
// denominator strings with a display decimal.
#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "thresholdlab/dynamics.hpp"
#include "thresholdlab/graph.hpp"
#include "thresholdlab/probability.hpp"
#include "thresholdlab/search.hpp"

namespace thresholdlab {

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json graph_to_json(const LabeledGraph& g);  // adds the role map

// Reads num_vertices and edges; any role map is ignored here.
Graph graph_from_json(const nlohmann::json& j);

// Role map keyed by stringified vertex id; empty when the key is absent.
std::vector<VertexRole> roles_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const ProcessTrace& trace);
ProcessTrace trace_from_json(const nlohmann::json& j, std::size_t num_vertices);

nlohmann::json probability_to_json(const ExactProbability& p, std::size_t digits = 10);
nlohmann::json estimate_to_json(const EstimateReport& report);
nlohmann::json search_report_to_json(const SearchReport& report);

}  // namespace thresholdlab
