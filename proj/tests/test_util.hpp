// Shared randomized-test helpers.
#pragma once

#include <random>
#include <vector>

#include "thresholdlab/graph.hpp"
#include "thresholdlab/vertex_set.hpp"

namespace testutil {

using thresholdlab::Edge;
using thresholdlab::Graph;
using thresholdlab::VertexId;
using thresholdlab::VertexSet;

// Random simple graph with 1..max_n vertices and a density drawn per graph.
inline Graph random_graph(std::mt19937_64& rng, std::size_t max_n = 16) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    int percent = std::uniform_int_distribution<int>(10, 80)(rng);
    std::uniform_int_distribution<int> coin(0, 99);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng) < percent) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Uniform random subset (each vertex kept with probability 1/2).
inline VertexSet random_subset(std::mt19937_64& rng, std::size_t universe) {
    VertexSet s(universe);
    std::uniform_int_distribution<int> coin(0, 1);
    for (VertexId v = 0; v < universe; ++v)
        if (coin(rng)) s.add(v);
    return s;
}

}  // namespace testutil
