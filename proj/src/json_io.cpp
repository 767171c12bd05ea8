#include "thresholdlab/json_io.hpp"

#include <string>

namespace thresholdlab {

using nlohmann::json;

namespace {

json ids_to_json(const VertexSet& set) { return json(set.ids()); }

VertexSet ids_from_json(const json& j, std::size_t universe) {
    VertexSet set(universe);
    for (const auto& id : j) set.add(id.get<VertexId>());
    return set;
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    return {{"num_vertices", g.num_vertices()}, {"edges", edges}};
}

json graph_to_json(const LabeledGraph& g) {
    json j = graph_to_json(g.graph());
    json roles = json::object();
    for (VertexId v = 0; v < g.graph().num_vertices(); ++v)
        roles[std::to_string(v)] = g.role_of(v).to_string();
    j["roles"] = roles;
    return j;
}

Graph graph_from_json(const json& j) {
    std::size_t num_vertices = j.at("num_vertices").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("each edge must be a two-element array");
        edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return Graph::from_edges(num_vertices, edges);
}

std::vector<VertexRole> roles_from_json(const json& j) {
    std::vector<VertexRole> roles;
    if (!j.contains("roles")) return roles;
    const json& map = j.at("roles");
    roles.resize(map.size());
    for (const auto& [key, value] : map.items()) {
        std::size_t v = std::stoul(key);
        if (v >= roles.size()) throw std::invalid_argument("role map id out of range");
        roles[v] = VertexRole::parse(value.get<std::string>());
    }
    return roles;
}

json trace_to_json(const ProcessTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) steps.push_back(ids_to_json(s));
    return {{"k", trace.k},
            {"seed", ids_to_json(trace.seed)},
            {"converted", trace.converted},
            {"steps", steps}};
}

ProcessTrace trace_from_json(const json& j, std::size_t num_vertices) {
    ProcessTrace trace;
    trace.k = j.at("k").get<unsigned>();
    trace.seed = ids_from_json(j.at("seed"), num_vertices);
    trace.converted = j.at("converted").get<bool>();
    for (const auto& s : j.at("steps")) trace.steps.push_back(ids_from_json(s, num_vertices));
    return trace;
}

json probability_to_json(const ExactProbability& p, std::size_t digits) {
    return {{"num", p.numerator().str()},
            {"den", p.denominator().str()},
            {"decimal", p.decimal(digits)}};
}

json estimate_to_json(const EstimateReport& report) {
    return {{"trials", report.trials},
            {"successes", report.successes},
            {"estimate", report.estimate},
            {"half_width_95", report.half_width_95},
            {"rng_seed", report.rng_seed}};
}

json search_report_to_json(const SearchReport& report) {
    json per_size = json::object();
    for (const auto& [size, tally] : report.per_size)
        per_size[std::to_string(size)] = {{"examined", tally.examined},
                                          {"converting", tally.converting}};
    json j = {{"k", report.k},
              {"num_vertices", report.num_vertices},
              {"minimum", report.minimum.seeds_required()},
              {"inconvertible", report.minimum.is_inconvertible()},
              {"sets_examined", report.sets_examined},
              {"per_size", per_size}};
    if (report.witness) j["witness"] = ids_to_json(*report.witness);
    return j;
}

}  // namespace thresholdlab
