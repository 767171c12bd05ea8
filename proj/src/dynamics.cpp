#include "thresholdlab/dynamics.hpp"

#include <bit>
#include <stdexcept>

namespace thresholdlab {

namespace {

void check_args(const Graph& g, const VertexSet& colored, unsigned k) {
    if (k == 0) throw std::invalid_argument("threshold k must be at least 1");
    if (colored.universe() != g.num_vertices())
        throw std::invalid_argument("seed universe does not match the graph");
}

}  // namespace

VertexSet step(const Graph& g, const VertexSet& colored, unsigned k) {
    check_args(g, colored, k);
    VertexSet next = colored;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (colored.contains(v)) continue;
        unsigned hits = 0;
        for (VertexId u : g.neighbors(v)) {
            if (colored.contains(u) && ++hits >= k) {
                next.add(v);
                break;
            }
        }
    }
    return next;
}

ProcessTrace run(const Graph& g, const VertexSet& seed, unsigned k, std::size_t max_steps) {
    check_args(g, seed, k);
    if (max_steps == 0) max_steps = g.num_vertices();
    ProcessTrace trace;
    trace.k = k;
    trace.seed = seed;
    trace.steps.push_back(seed);
    for (std::size_t t = 0; t < max_steps; ++t) {
        VertexSet next = step(g, trace.steps.back(), k);
        if (next == trace.steps.back()) break;  // fixpoint; do not record the repeat
        trace.steps.push_back(std::move(next));
    }
    trace.converted = trace.steps.back().count() == g.num_vertices();
    return trace;
}

bool is_conversion_set(const Graph& g, const VertexSet& seed, unsigned k) {
    check_args(g, seed, k);
    VertexSet cur = seed;
    for (;;) {
        VertexSet next = step(g, cur, k);
        if (next == cur) return cur.count() == g.num_vertices();
        cur = std::move(next);
    }
}

VertexSet required_low_degree_vertices(const Graph& g, unsigned k) {
    if (k == 0) throw std::invalid_argument("threshold k must be at least 1");
    VertexSet required(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) < k) required.add(v);
    return required;
}

CompactDynamics::CompactDynamics(const Graph& g) {
    if (g.num_vertices() > kMaxVertices)
        throw std::invalid_argument("compact dynamics requires at most 64 vertices");
    nbr_.resize(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (VertexId u : g.neighbors(v)) nbr_[v] |= 1ULL << u;
    full_ = g.num_vertices() == 64 ? ~0ULL : (1ULL << g.num_vertices()) - 1;
}

std::uint64_t CompactDynamics::fixpoint(std::uint64_t colored, unsigned k) const {
    if (k == 0) throw std::invalid_argument("threshold k must be at least 1");
    colored &= full_;
    for (;;) {
        std::uint64_t next = colored;
        std::uint64_t pending = full_ & ~colored;
        while (pending) {
            VertexId v = static_cast<VertexId>(std::countr_zero(pending));
            pending &= pending - 1;
            if (static_cast<unsigned>(std::popcount(nbr_[v] & colored)) >= k)
                next |= 1ULL << v;
        }
        if (next == colored) return colored;
        colored = next;
    }
}

}  // namespace thresholdlab
