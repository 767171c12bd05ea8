#include "thresholdlab/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thresholdlab {

Graph Graph::from_edges(std::size_t num_vertices, const std::vector<Edge>& edges) {
    Graph g;
    g.adj_.assign(num_vertices, {});
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u >= num_vertices || v >= num_vertices)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loops are not allowed");
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.num_edges_ = seen.size();
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& nbrs = adj_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(num_edges_);
    for (VertexId u = 0; u < adj_.size(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) edges.emplace_back(u, v);
    // Outer loop runs in ascending u and each list is sorted, so the result
    // is already lexicographic.
    return edges;
}

std::string VertexRole::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case RoleKind::Inner: out << "Inner(" << cycle_index << ")"; break;
        case RoleKind::Outer: out << "Outer(" << cycle_index << ")"; break;
        case RoleKind::Block: out << "Block(" << cycle_index << "," << block_member << ")"; break;
    }
    return out.str();
}

VertexRole VertexRole::parse(std::string_view text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw std::invalid_argument("malformed vertex role: " + std::string(text));
    std::string name(text.substr(0, open));
    std::string args(text.substr(open + 1, close - open - 1));
    auto parse_index = [&](const std::string& s) {
        std::size_t pos = 0;
        unsigned long value = std::stoul(s, &pos);
        if (pos != s.size() || value == 0)
            throw std::invalid_argument("malformed vertex role index: " + std::string(text));
        return static_cast<std::size_t>(value);
    };
    if (name == "Inner" || name == "Outer") {
        if (args.find(',') != std::string::npos)
            throw std::invalid_argument("malformed vertex role: " + std::string(text));
        std::size_t i = parse_index(args);
        return name == "Inner" ? inner(i) : outer(i);
    }
    if (name == "Block") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("malformed vertex role: " + std::string(text));
        return block(parse_index(args.substr(0, comma)), parse_index(args.substr(comma + 1)));
    }
    throw std::invalid_argument("unknown vertex role kind: " + std::string(text));
}

std::string family_name(Family family) {
    switch (family) {
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Corona: return "corona";
        case Family::DoubleCorona: return "double-corona";
    }
    throw std::logic_error("unreachable family");
}

Family family_from_name(std::string_view name) {
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "corona") return Family::Corona;
    if (name == "double-corona" || name == "double_corona") return Family::DoubleCorona;
    throw std::invalid_argument("unknown family: " + std::string(name));
}

void FamilySpec::validate() const {
    switch (family) {
        case Family::Cycle:
        case Family::Corona:
        case Family::DoubleCorona:
            if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
            break;
        case Family::Complete:
            break;  // any p >= 0
    }
}

std::size_t FamilySpec::expected_vertices() const {
    switch (family) {
        case Family::Cycle: return n;
        case Family::Complete: return p;
        case Family::Corona: return n * (p + 1);
        case Family::DoubleCorona: return n * (p + 2);
    }
    throw std::logic_error("unreachable family");
}

std::size_t FamilySpec::expected_edges() const {
    switch (family) {
        case Family::Cycle: return n;
        case Family::Complete: return p == 0 ? 0 : p * (p - 1) / 2;
        case Family::Corona: return n * (p * (p + 1) / 2 + 1);
        case Family::DoubleCorona: return n * ((p + 1) * (p + 2) / 2 + 1);
    }
    throw std::logic_error("unreachable family");
}

LabeledGraph::LabeledGraph(FamilySpec spec, Graph graph, std::vector<VertexRole> roles)
    : spec_(spec), graph_(std::move(graph)), roles_(std::move(roles)) {
    if (roles_.size() != graph_.num_vertices())
        throw std::invalid_argument("role map size must match vertex count");
}

VertexId LabeledGraph::inner(std::size_t i) const {
    if (i == 0 || i > spec_.n) throw std::out_of_range("inner index out of range");
    return i - 1;
}

VertexId LabeledGraph::outer(std::size_t i) const {
    if (spec_.family != Family::DoubleCorona)
        throw std::logic_error("outer vertices exist only in double coronas");
    if (i == 0 || i > spec_.n) throw std::out_of_range("outer index out of range");
    return spec_.n + i - 1;
}

VertexId LabeledGraph::block_vertex(std::size_t i, std::size_t j) const {
    if (i == 0 || i > spec_.n || j == 0 || j > spec_.p)
        throw std::out_of_range("block index out of range");
    std::size_t base = spec_.family == Family::DoubleCorona ? 2 * spec_.n : spec_.n;
    return base + (i - 1) * spec_.p + (j - 1);
}

Graph build_cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph build_complete(std::size_t p) {
    std::vector<Edge> edges;
    edges.reserve(p == 0 ? 0 : p * (p - 1) / 2);
    for (VertexId u = 0; u < p; ++u)
        for (VertexId v = u + 1; v < p; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(p, edges);
}

namespace {

// Shared builder. The corona has one cycle on 0..n-1 and one p-clique per
// cycle vertex, fully joined to it. The double corona carries a second,
// disjoint cycle on n..2n-1; block i is joined to both the i-th inner and the
// i-th outer cycle vertex (the two cycles touch only through the blocks).
LabeledGraph build_product(Family family, std::size_t n, std::size_t p) {
    FamilySpec spec{family, n, p};
    spec.validate();
    bool twin = family == Family::DoubleCorona;
    std::size_t total = n * ((twin ? 2 : 1) + p);

    std::vector<Edge> edges;
    std::vector<VertexRole> roles;
    roles.reserve(total);
    for (std::size_t i = 1; i <= n; ++i) roles.push_back(VertexRole::inner(i));
    for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    if (twin) {
        for (std::size_t i = 1; i <= n; ++i) roles.push_back(VertexRole::outer(i));
        for (VertexId i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + 1) % n);
    }
    std::size_t block_base = n * (twin ? 2 : 1);
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t base = block_base + (i - 1) * p;
        for (std::size_t j = 1; j <= p; ++j) {
            roles.push_back(VertexRole::block(i, j));
            edges.emplace_back(i - 1, base + j - 1);
            if (twin) edges.emplace_back(n + i - 1, base + j - 1);
            for (std::size_t j2 = j + 1; j2 <= p; ++j2)
                edges.emplace_back(base + j - 1, base + j2 - 1);
        }
    }
    return LabeledGraph(spec, Graph::from_edges(total, edges), std::move(roles));
}

}  // namespace

LabeledGraph build_corona(std::size_t n, std::size_t p) {
    return build_product(Family::Corona, n, p);
}

LabeledGraph build_double_corona(std::size_t n, std::size_t p) {
    return build_product(Family::DoubleCorona, n, p);
}

LabeledGraph build_family(const FamilySpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::Cycle: {
            std::vector<VertexRole> roles;
            for (std::size_t i = 1; i <= spec.n; ++i) roles.push_back(VertexRole::inner(i));
            return LabeledGraph(spec, build_cycle(spec.n), std::move(roles));
        }
        case Family::Complete: {
            std::vector<VertexRole> roles;
            for (std::size_t j = 1; j <= spec.p; ++j) roles.push_back(VertexRole::block(1, j));
            return LabeledGraph(spec, build_complete(spec.p), std::move(roles));
        }
        case Family::Corona: return build_corona(spec.n, spec.p);
        case Family::DoubleCorona: return build_double_corona(spec.n, spec.p);
    }
    throw std::logic_error("unreachable family");
}

}  // namespace thresholdlab
