#include "thresholdlab/probability.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "thresholdlab/closed_form.hpp"
#include "thresholdlab/dynamics.hpp"

namespace thresholdlab {

BigInt big_binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    BigInt result = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        result *= static_cast<unsigned long long>(n - r + i);
        result /= static_cast<unsigned long long>(i);
    }
    return result;
}

ExactProbability::ExactProbability(const BigInt& numerator, const BigInt& denominator) {
    if (denominator <= 0) throw std::invalid_argument("probability denominator must be positive");
    if (numerator < 0 || numerator > denominator)
        throw std::invalid_argument("probability must lie in [0, 1]");
    value_ = BigRational(numerator, denominator);
}

ExactProbability ExactProbability::complement() const {
    ExactProbability result;
    result.value_ = BigRational(1) - value_;
    return result;
}

std::string ExactProbability::to_string() const {
    return numerator().str() + "/" + denominator().str();
}

std::string ExactProbability::decimal(std::size_t digits) const {
    BigInt num = numerator();
    BigInt den = denominator();
    BigInt scale = 1;
    for (std::size_t i = 0; i < digits; ++i) scale *= 10;
    BigInt rounded = (num * scale * 2 + den) / (den * 2);  // round half up
    BigInt whole = rounded / scale;
    std::string frac = BigInt(rounded % scale).str();
    if (digits == 0) return whole.str();
    return whole.str() + "." + std::string(digits - frac.size(), '0') + frac;
}

ExactProbability corona_success_probability(std::size_t n, std::size_t p, unsigned k) {
    if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (k == 0) throw std::invalid_argument("threshold k must be at least 1");
    if (p == 0)
        throw std::invalid_argument("empty blocks reduce to the plain cycle, which has no "
                                    "closed-form seeding probability; use enumeration or "
                                    "Monte-Carlo estimation");
    std::size_t num_vertices = n * (p + 1);
    if (k <= p + 1) {
        // Success needs one fully free block adjacent to the lone cycle seed
        // and k-1 chosen vertices inside every other block.
        BigInt num = BigInt(static_cast<unsigned long long>(n)) *
                     boost::multiprecision::pow(big_binomial(p, k - 1),
                                                static_cast<unsigned>(n - 1)) *
                     big_binomial(p + 1, k);
        BigInt den = big_binomial(num_vertices, (k - 1) * n + 1);
        return {num, den};
    }
    if (k == p + 2) {
        // Only the alternating cycle placements work: 2 rotations for even
        // cycles, n for odd ones (2 + (n-2) when n is odd).
        BigInt num = 2 + BigInt(static_cast<unsigned long long>(n - 2)) * (n % 2);
        BigInt den = big_binomial(num_vertices, p * n + (n + 1) / 2);
        return {num, den};
    }
    return ExactProbability::one();  // inconvertible: the only "minimum" seed is V itself
}

ExactProbability corona_resilience_factor(std::size_t n, std::size_t p, unsigned k) {
    return corona_success_probability(n, p, k).complement();
}

ExactProbability enumeration_probability(const Graph& g, unsigned k, std::size_t size,
                                         const SearchOptions& options) {
    std::uint64_t hits = count_converting_sets(g, k, size, options);
    return {BigInt(hits), big_binomial(g.num_vertices(), size)};
}

namespace {

constexpr unsigned kStrata = 64;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Exactly uniform draw from [0, bound) by masked rejection. Unlike
// std::uniform_int_distribution, the consumed stream is pinned by the
// standard, so fixed rng seeds reproduce across library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t mask = std::bit_ceil(bound) - 1;
    for (;;) {
        std::uint64_t v = rng() & mask;
        if (v < bound) return v;
    }
}

// Trials of one stratum with its own substream; returns the success count.
template <typename Tester>
std::uint64_t run_stratum(std::uint64_t stratum, std::uint64_t trials, std::uint64_t rng_seed,
                          std::size_t n, std::size_t size, Tester&& test) {
    std::mt19937_64 rng(splitmix64(rng_seed ^ (0xA0761D6478BD642FULL * (stratum + 1))));
    std::vector<VertexId> pool(n);
    std::iota(pool.begin(), pool.end(), VertexId{0});
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        // Partial Fisher-Yates: after it, pool[0..size) is a uniform sample.
        // Leaving the tail permuted keeps later draws uniform too.
        for (std::size_t i = 0; i < size; ++i)
            std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
        successes += test(pool.data(), size);
    }
    return successes;
}

}  // namespace

EstimateReport monte_carlo_probability(const Graph& g, unsigned k, std::size_t size,
                                       std::uint64_t trials, std::uint64_t rng_seed,
                                       unsigned num_threads) {
    if (k == 0) throw std::invalid_argument("threshold k must be at least 1");
    if (trials == 0) throw std::invalid_argument("at least one trial is required");
    std::size_t n = g.num_vertices();
    if (size > n) throw std::invalid_argument("seed size exceeds the vertex count");

    // Each stratum is a fixed slice of the trial count with its own RNG
    // substream; workers pick strata off a shared counter.
    std::vector<std::uint64_t> successes(kStrata, 0);
    std::atomic<unsigned> next_stratum{0};
    auto stratum_trials = [&](unsigned s) {
        return trials / kStrata + (s < trials % kStrata ? 1 : 0);
    };

    auto worker = [&] {
        const bool compact = n <= CompactDynamics::kMaxVertices;
        CompactDynamics engine = compact ? CompactDynamics(g) : CompactDynamics(Graph{});
        VertexSet scratch(n);
        auto test = [&](const VertexId* ids, std::size_t count) -> std::uint64_t {
            if (compact) {
                std::uint64_t mask = 0;
                for (std::size_t i = 0; i < count; ++i) mask |= 1ULL << ids[i];
                return engine.converts(mask, k) ? 1 : 0;
            }
            scratch.clear();
            for (std::size_t i = 0; i < count; ++i) scratch.add(ids[i]);
            return is_conversion_set(g, scratch, k) ? 1 : 0;
        };
        for (;;) {
            unsigned s = next_stratum.fetch_add(1);
            if (s >= kStrata) break;
            successes[s] = run_stratum(s, stratum_trials(s), rng_seed, n, size, test);
        }
    };

    unsigned threads = num_threads ? num_threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, kStrata);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    EstimateReport report;
    report.trials = trials;
    report.rng_seed = rng_seed;
    for (std::uint64_t s : successes) report.successes += s;
    report.estimate = static_cast<double>(report.successes) / static_cast<double>(trials);
    report.half_width_95 =
        1.96 * std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(trials));
    return report;
}

}  // namespace thresholdlab
