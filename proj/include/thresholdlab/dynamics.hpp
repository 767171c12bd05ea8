// Synchronous irreversible k-threshold conversion dynamics.
//
// Starting from a seed set, every round simultaneously colors each uncolored
// vertex that has at least k colored neighbors; colored vertices never revert.
// The process reaches a fixpoint after at most |V| rounds.
#pragma once

#include <cstdint>
#include <vector>

#include "thresholdlab/graph.hpp"
#include "thresholdlab/vertex_set.hpp"

namespace thresholdlab {

// Full history of one run: steps[0] is the seed, steps.back() the fixpoint,
// and consecutive entries are distinct (the final repeat is not recorded).
struct ProcessTrace {
    unsigned k = 1;
    VertexSet seed;
    std::vector<VertexSet> steps;
    bool converted = false;

    // Rounds until the fixpoint, i.e. the t in S_t = steps.back().
    std::size_t step_count() const { return steps.size() - 1; }
};

// One synchronous round. Requires k >= 1 and a seed over g's vertex set.
VertexSet step(const Graph& g, const VertexSet& colored, unsigned k);

// Runs to the fixpoint (or until max_steps rounds; 0 means |V|, which always
// suffices) and records the history.
ProcessTrace run(const Graph& g, const VertexSet& seed, unsigned k, std::size_t max_steps = 0);

// True when the fixpoint reached from seed is the whole vertex set.
bool is_conversion_set(const Graph& g, const VertexSet& seed, unsigned k);

// Vertices of degree < k. They can never be colored by neighbors, so every
// conversion set must contain all of them.
VertexSet required_low_degree_vertices(const Graph& g, unsigned k);

// Single-word engine for graphs with at most 64 vertices; used by the
// enumeration and sampling loops. Produces the same fixpoints as run().
class CompactDynamics {
public:
    static constexpr std::size_t kMaxVertices = 64;

    explicit CompactDynamics(const Graph& g);

    std::size_t num_vertices() const { return nbr_.size(); }
    std::uint64_t full_mask() const { return full_; }
    std::uint64_t neighbor_mask(VertexId v) const { return nbr_[v]; }

    std::uint64_t fixpoint(std::uint64_t colored, unsigned k) const;
    bool converts(std::uint64_t seed, unsigned k) const { return fixpoint(seed, k) == full_; }

private:
    std::vector<std::uint64_t> nbr_;
    std::uint64_t full_ = 0;
};

}  // namespace thresholdlab
