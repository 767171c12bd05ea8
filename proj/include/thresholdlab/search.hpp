// Exhaustive minimum-seed search and converting-set counting.
//
// Every conversion set must contain all vertices of degree < k, so the
// enumeration fixes those and walks size classes of the remaining vertices in
// lexicographic order. The total number of candidate seeds is bounded up
// front against a budget; instances that would exceed it are refused before
// any work happens.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thresholdlab/closed_form.hpp"
#include "thresholdlab/graph.hpp"
#include "thresholdlab/vertex_set.hpp"

namespace thresholdlab {

// Candidate seeds simulated before a search refuses to run.
inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// C(n, r) clamped to the uint64 range.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r);

// Lexicographic r-element combinations of {0, ..., n-1}.
struct Combinations {
    static std::vector<std::size_t> first(std::size_t r);

    // Advances in place; returns false once comb was the last combination.
    static bool next(std::vector<std::size_t>& comb, std::size_t n);

    // Combination at the given lexicographic rank (rank < C(n, r)).
    static std::vector<std::size_t> unrank(std::size_t n, std::size_t r, std::uint64_t rank);
};

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(std::uint64_t required, std::uint64_t budget);
    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

struct SearchOptions {
    std::uint64_t budget = kDefaultSearchBudget;
    std::size_t size_limit = 0;  // largest seed size to try; 0 means |V|
    unsigned num_threads = 0;    // 0 means hardware concurrency
};

struct SizeTally {
    std::uint64_t examined = 0;
    std::uint64_t converting = 0;
    bool operator==(const SizeTally&) const = default;
};

struct SearchReport {
    unsigned k = 1;
    std::size_t num_vertices = 0;
    ConversionNumber minimum = ConversionNumber::finite(0);
    // Lexicographically least converting seed of minimum size; absent when
    // the instance is inconvertible (only the full set converts).
    std::optional<VertexSet> witness;
    std::uint64_t sets_examined = 0;
    // Exhaustive per-size tallies; every listed size was fully enumerated.
    std::map<std::size_t, SizeTally> per_size;
};

// Finds the minimum converting seed size by exhausting sizes upward. Reports
// Inconvertible when the first converting size is |V| itself. Throws
// BudgetExceededError before doing any work if the worst-case enumeration
// exceeds options.budget, and std::runtime_error if a size_limit below |V|
// exhausts without a hit.
SearchReport brute_force_min(const Graph& g, unsigned k, const SearchOptions& options = {});

// Exact number of converting seeds of exactly the given size.
std::uint64_t count_converting_sets(const Graph& g, unsigned k, std::size_t size,
                                    const SearchOptions& options = {});

}  // namespace thresholdlab
