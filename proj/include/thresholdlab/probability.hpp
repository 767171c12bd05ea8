// Exact and estimated probabilities that a uniformly random seed of a given
// size converts the graph, plus the closed-form success probability for
// corona products seeded at their conversion number.
#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "thresholdlab/graph.hpp"
#include "thresholdlab/search.hpp"

namespace thresholdlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact C(n, r).
BigInt big_binomial(std::size_t n, std::size_t r);

// A probability as a reduced fraction. All arithmetic is integer-exact; the
// decimal form exists only for display.
class ExactProbability {
public:
    ExactProbability() = default;  // zero
    ExactProbability(const BigInt& numerator, const BigInt& denominator);

    static ExactProbability zero() { return {}; }
    static ExactProbability one() { return {1, 1}; }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    ExactProbability complement() const;  // 1 - p
    double to_double() const { return static_cast<double>(value_); }

    std::string to_string() const;  // "num/den" in lowest terms
    std::string decimal(std::size_t digits = 10) const;  // rounded half up

    bool operator==(const ExactProbability&) const = default;

private:
    BigRational value_ = 0;
};

// Probability that a uniformly random seed of size conv_corona(n, p, k)
// converts C_n (.) K_p. Exact in all three threshold regimes. Requires
// p >= 1: with empty blocks the product degenerates to the cycle, where no
// closed form is claimed — use enumeration or sampling instead.
ExactProbability corona_success_probability(std::size_t n, std::size_t p, unsigned k);

// Complementary failure probability 1 - corona_success_probability.
ExactProbability corona_resilience_factor(std::size_t n, std::size_t p, unsigned k);

// Exact probability by enumerating every size-element seed (budget-checked).
ExactProbability enumeration_probability(const Graph& g, unsigned k, std::size_t size,
                                         const SearchOptions& options = {});

struct EstimateReport {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double half_width_95 = 0.0;  // 1.96 * sqrt(est * (1 - est) / trials)
    std::uint64_t rng_seed = 0;
};

// Monte-Carlo estimate over uniformly random size-element seeds. Trials are
// split across 64 fixed strata with seed-derived substreams, so the result
// depends only on (rng_seed, trials), never on the thread count.
EstimateReport monte_carlo_probability(const Graph& g, unsigned k, std::size_t size,
                                       std::uint64_t trials, std::uint64_t rng_seed,
                                       unsigned num_threads = 0);

}  // namespace thresholdlab
