// Canonical minimum seed constructions for cycles, coronas and double
// coronas, plus the per-position block-pattern notation used to describe
// double-corona seeds compactly.
#pragma once

#include <cstddef>
#include <string>

#include "thresholdlab/graph.hpp"
#include "thresholdlab/vertex_set.hpp"

namespace thresholdlab {

// Seeding recipe with one letter per cycle position, read cyclically when
// shorter than the cycle:
//   B  no seeds at this position
//   I  the inner-cycle vertex
//   O  the outer-cycle vertex
//   M  one block vertex
//   T  two block vertices
//   C  the whole closed block: inner, outer, and every block vertex
class BlockPattern {
public:
    static BlockPattern parse(std::string labels);  // validates the alphabet

    const std::string& labels() const { return labels_; }
    std::size_t length() const { return labels_.size(); }

    // Letter governing 1-based cycle position i (cyclic extension).
    char letter_at(std::size_t i) const { return labels_[(i - 1) % labels_.size()]; }

    bool operator==(const BlockPattern&) const = default;

private:
    explicit BlockPattern(std::string labels) : labels_(std::move(labels)) {}
    std::string labels_;
};

// Places a pattern on the double corona C_n (..) K_p using canonical
// numbering; M seeds Block(i,1) and T seeds Block(i,1..2).
VertexSet pattern_to_seed(const BlockPattern& pattern, std::size_t n, std::size_t p);

// Classifies a double-corona seed position by position. Rejects seeds whose
// per-position counts are not expressible (anything other than 0, 1, 2 block
// vertices, or the whole closed block) with a diagnostic naming the position.
BlockPattern seed_to_pattern(const VertexSet& seed, std::size_t n, std::size_t p);

// Length-n pattern behind the threshold-2 double-corona minimum: the cyclic
// M,O,M,B placement for p >= 2, or the inner/outer alternation for p = 1.
// Rejects p = 0 (that instance is handled by seeding both cycles directly).
BlockPattern canonical_double_corona_pattern(std::size_t n, std::size_t p);

// Minimum-size converting seeds matching the closed forms. All of them
// reject inconvertible instances, where only the full vertex set converts.
VertexSet canonical_cycle_seed(std::size_t n, unsigned k);
VertexSet canonical_corona_seed(std::size_t n, std::size_t p, unsigned k);
VertexSet canonical_double_corona_seed(std::size_t n, std::size_t p, unsigned k);

// Dispatch on the family (complete graphs are not covered).
VertexSet canonical_seed(const FamilySpec& spec, unsigned k);

}  // namespace thresholdlab
