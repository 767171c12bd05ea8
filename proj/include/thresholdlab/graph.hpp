// Immutable simple undirected graphs plus the canonical constructions for
// cycles, complete graphs, corona products and double-corona products.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thresholdlab {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

// Undirected simple graph. Neighbor lists are sorted, symmetric, and free of
// self-loops and duplicates; the structure never changes after construction.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Rejects out-of-range endpoints, self-loops
    // and repeated edges.
    static Graph from_edges(std::size_t num_vertices, const std::vector<Edge>& edges);

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    bool has_edge(VertexId u, VertexId v) const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edge_list() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::size_t num_edges_ = 0;
};

enum class RoleKind { Inner, Outer, Block };

// Structural role of a vertex inside a product-family graph. Indices are
// 1-based to follow the usual v_i / w_i / u_i^j naming.
struct VertexRole {
    RoleKind kind = RoleKind::Inner;
    std::size_t cycle_index = 0;   // position around the cycle, 1..n
    std::size_t block_member = 0;  // within-block index, 1..p (Block only)

    static VertexRole inner(std::size_t i) { return {RoleKind::Inner, i, 0}; }
    static VertexRole outer(std::size_t i) { return {RoleKind::Outer, i, 0}; }
    static VertexRole block(std::size_t i, std::size_t j) { return {RoleKind::Block, i, j}; }

    std::string to_string() const;              // "Inner(1)", "Outer(2)", "Block(3,1)"
    static VertexRole parse(std::string_view text);

    bool operator==(const VertexRole&) const = default;
};

enum class Family { Cycle, Complete, Corona, DoubleCorona };

std::string family_name(Family family);
Family family_from_name(std::string_view name);

// Parameters of one family instance: n is the cycle length, p the block size.
// Complete graphs use only p; cycles use only n.
struct FamilySpec {
    Family family = Family::Cycle;
    std::size_t n = 0;
    std::size_t p = 0;

    void validate() const;  // throws std::invalid_argument
    std::size_t expected_vertices() const;
    std::size_t expected_edges() const;

    bool operator==(const FamilySpec&) const = default;
};

// A family graph with its role map and canonical vertex numbering.
//
// Canonical numbering: inner vertices are 0..n-1 in cycle order; outer
// vertices (double corona) follow at n..2n-1; block vertices come last,
// grouped by block, so Block(i,j) sits at block_base + (i-1)p + (j-1).
class LabeledGraph {
public:
    LabeledGraph(FamilySpec spec, Graph graph, std::vector<VertexRole> roles);

    const FamilySpec& spec() const { return spec_; }
    const Graph& graph() const { return graph_; }
    const std::vector<VertexRole>& roles() const { return roles_; }
    const VertexRole& role_of(VertexId v) const { return roles_.at(v); }

    VertexId inner(std::size_t i) const;                   // i in 1..n
    VertexId outer(std::size_t i) const;                   // double corona only
    VertexId block_vertex(std::size_t i, std::size_t j) const;  // j in 1..p

private:
    FamilySpec spec_;
    Graph graph_;
    std::vector<VertexRole> roles_;
};

Graph build_cycle(std::size_t n);      // n >= 3
Graph build_complete(std::size_t p);   // p = 0 gives the empty graph

LabeledGraph build_corona(std::size_t n, std::size_t p);
LabeledGraph build_double_corona(std::size_t n, std::size_t p);

// Dispatches on spec.family; cycles get Inner roles, complete graphs Block(1,j).
LabeledGraph build_family(const FamilySpec& spec);

}  // namespace thresholdlab
