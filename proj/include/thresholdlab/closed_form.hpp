// Closed-form conversion numbers for cycles, corona products C_n (.) K_p and
// double coronas C_n (..) K_p, plus the peeling reductions that recompute the
// same values by stripping one layer of block vertices per step.
#pragma once

#include <cstddef>
#include <string>

#include "thresholdlab/graph.hpp"

namespace thresholdlab {

// Minimum seeds needed to convert a graph. Either a finite minimum, or the
// instance is inconvertible: only the full vertex set converts, so the
// minimum degenerates to |V|.
class ConversionNumber {
public:
    static ConversionNumber finite(std::size_t seeds) { return {seeds, false}; }
    static ConversionNumber inconvertible(std::size_t num_vertices) { return {num_vertices, true}; }

    bool is_finite() const { return !inconvertible_; }
    bool is_inconvertible() const { return inconvertible_; }

    // The finite minimum; throws for inconvertible instances.
    std::size_t value() const;

    // Seeds needed in every case: value() when finite, |V| when inconvertible.
    std::size_t seeds_required() const { return seeds_; }

    std::string to_string() const;  // "11" or "inconvertible(9)"

    bool operator==(const ConversionNumber&) const = default;

private:
    ConversionNumber(std::size_t seeds, bool inconvertible)
        : seeds_(seeds), inconvertible_(inconvertible) {}

    std::size_t seeds_ = 0;
    bool inconvertible_ = false;
};

// Cycle C_n, n >= 3: 1 seed for k = 1, ceil(n/2) for k = 2, inconvertible
// for k >= 3 (every vertex has degree 2).
ConversionNumber conv_cycle(std::size_t n, unsigned k);

// Corona C_n (.) K_p. For p = 0 this is the cycle. Otherwise:
//   k <= p+1 : (k-1)n + 1
//   k == p+2 : pn + ceil(n/2)
//   k >= p+3 : inconvertible, |V| = n(p+1).
ConversionNumber conv_corona(std::size_t n, std::size_t p, unsigned k);

// Double corona C_n (..) K_p. For p = 0 the construction degenerates to two
// disjoint cycles, doubling the cycle answer. Otherwise:
//   k == 1       : 1
//   2 <= k <= p  : (k-2)n + floor((3n+3)/4)
//   k == p+1     : pn
//   k == p+2     : pn + 2*ceil(n/2)
//   k >= p+3     : inconvertible, |V| = n(p+2).
ConversionNumber conv_double_corona(std::size_t n, std::size_t p, unsigned k);

// Independent recomputation of conv_corona: each peeling step puts
// r = min(k-1, p) seeds into every block and recurses on C_n (.) K_{p-r}
// with threshold k - r.
ConversionNumber reduce_corona(std::size_t n, std::size_t p, unsigned k);

// Independent recomputation of conv_double_corona for k >= 2; the peeling
// step uses tau = min(k-2, p) and ends in a pendant-cycle base case.
ConversionNumber reduce_double_corona(std::size_t n, std::size_t p, unsigned k);

// Closed-form dispatch on a family spec (no formula covers Complete).
ConversionNumber conversion_number(const FamilySpec& spec, unsigned k);

}  // namespace thresholdlab
