#include "thresholdlab/search.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "thresholdlab/dynamics.hpp"

namespace thresholdlab {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > kU64Max - b ? kU64Max : a + b;
}

}  // namespace

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        // result == C(n - r + i - 1, i - 1); the update is exact integer math.
        unsigned __int128 t = static_cast<unsigned __int128>(result) * (n - r + i);
        t /= i;
        if (t > kU64Max) return kU64Max;
        result = static_cast<std::uint64_t>(t);
    }
    return result;
}

std::vector<std::size_t> Combinations::first(std::size_t r) {
    std::vector<std::size_t> comb(r);
    for (std::size_t i = 0; i < r; ++i) comb[i] = i;
    return comb;
}

bool Combinations::next(std::vector<std::size_t>& comb, std::size_t n) {
    std::size_t r = comb.size();
    for (std::size_t i = r; i-- > 0;) {
        if (comb[i] != i + n - r) {
            ++comb[i];
            for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> Combinations::unrank(std::size_t n, std::size_t r, std::uint64_t rank) {
    std::vector<std::size_t> comb;
    comb.reserve(r);
    std::size_t candidate = 0;
    for (std::size_t picked = 0; picked < r; ++picked) {
        for (;; ++candidate) {
            // Combinations starting with `candidate` in this slot.
            std::uint64_t with_candidate = binomial_u64(n - candidate - 1, r - picked - 1);
            if (rank < with_candidate) break;
            rank -= with_candidate;
        }
        comb.push_back(candidate++);
    }
    return comb;
}

BudgetExceededError::BudgetExceededError(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration would simulate " + std::to_string(required) +
                         " candidate seeds, exceeding the budget of " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

namespace {

struct SizeOutcome {
    std::uint64_t converting = 0;
    std::optional<std::uint64_t> first_hit_rank;
};

// Enumerates all C(n_free, r) combinations split into contiguous rank ranges,
// one worker per range. make_tester() builds a per-worker predicate, so each
// worker owns its scratch state; merged results do not depend on the worker
// count.
template <typename MakeTester>
SizeOutcome enumerate_size(std::size_t n_free, std::size_t r, std::uint64_t total,
                           unsigned requested_threads, MakeTester make_tester) {
    constexpr std::uint64_t kMinChunk = 4096;
    unsigned hw = requested_threads ? requested_threads
                                    : std::max(1u, std::thread::hardware_concurrency());
    unsigned workers = total >= 2 * kMinChunk
                           ? static_cast<unsigned>(std::min<std::uint64_t>(hw, total / kMinChunk))
                           : 1;

    std::vector<SizeOutcome> partial(workers);
    auto run_range = [&](unsigned w) {
        std::uint64_t lo = w * (total / workers) + std::min<std::uint64_t>(w, total % workers);
        std::uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
        if (lo >= hi) return;
        auto tester = make_tester();
        std::vector<std::size_t> comb = Combinations::unrank(n_free, r, lo);
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            if (tester(comb)) {
                ++partial[w].converting;
                if (!partial[w].first_hit_rank) partial[w].first_hit_rank = rank;
            }
            if (rank + 1 < hi) Combinations::next(comb, n_free);
        }
    };

    if (workers == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_range, w);
        for (auto& t : pool) t.join();
    }

    SizeOutcome merged;
    for (const auto& part : partial) {
        merged.converting += part.converting;
        if (part.first_hit_rank &&
            (!merged.first_hit_rank || *part.first_hit_rank < *merged.first_hit_rank))
            merged.first_hit_rank = part.first_hit_rank;
    }
    return merged;
}

// Runs one size class with the fastest applicable engine.
SizeOutcome run_size(const Graph& g, unsigned k, const std::vector<VertexId>& free_ids,
                     const VertexSet& base, std::size_t r, std::uint64_t total,
                     unsigned threads) {
    if (g.num_vertices() <= CompactDynamics::kMaxVertices) {
        CompactDynamics engine(g);
        std::uint64_t base_mask = 0;
        for (VertexId v : base.ids()) base_mask |= 1ULL << v;
        return enumerate_size(free_ids.size(), r, total, threads, [&] {
            return [&engine, base_mask, &free_ids, k](const std::vector<std::size_t>& comb) {
                std::uint64_t mask = base_mask;
                for (std::size_t idx : comb) mask |= 1ULL << free_ids[idx];
                return engine.converts(mask, k);
            };
        });
    }
    return enumerate_size(free_ids.size(), r, total, threads, [&] {
        return [&g, base, &free_ids, k,
                scratch = VertexSet(g.num_vertices())](const std::vector<std::size_t>& comb) mutable {
            scratch = base;
            for (std::size_t idx : comb) scratch.add(free_ids[idx]);
            return is_conversion_set(g, scratch, k);
        };
    });
}

VertexSet witness_from_rank(const VertexSet& base, const std::vector<VertexId>& free_ids,
                            std::size_t r, std::uint64_t rank) {
    VertexSet witness = base;
    for (std::size_t idx : Combinations::unrank(free_ids.size(), r, rank))
        witness.add(free_ids[idx]);
    return witness;
}

}  // namespace

SearchReport brute_force_min(const Graph& g, unsigned k, const SearchOptions& options) {
    if (k == 0) throw std::invalid_argument("threshold k must be at least 1");
    std::size_t n = g.num_vertices();
    SearchReport report;
    report.k = k;
    report.num_vertices = n;
    if (n == 0) {
        report.minimum = ConversionNumber::finite(0);
        report.witness = VertexSet(0);
        return report;
    }

    std::size_t size_limit = options.size_limit ? std::min(options.size_limit, n) : n;
    VertexSet required = required_low_degree_vertices(g, k);
    std::vector<VertexId> free_ids;
    for (VertexId v = 0; v < n; ++v)
        if (!required.contains(v)) free_ids.push_back(v);

    std::size_t first_size = std::max<std::size_t>(1, required.count());
    std::uint64_t worst_case = 0;
    for (std::size_t m = first_size; m <= size_limit; ++m)
        worst_case = saturating_add(worst_case, binomial_u64(free_ids.size(), m - required.count()));
    if (worst_case > options.budget) throw BudgetExceededError(worst_case, options.budget);

    for (std::size_t m = first_size; m <= size_limit; ++m) {
        std::size_t r = m - required.count();
        std::uint64_t total = binomial_u64(free_ids.size(), r);
        SizeOutcome outcome = run_size(g, k, free_ids, required, r, total, options.num_threads);
        report.sets_examined += total;
        report.per_size[m] = {total, outcome.converting};
        if (outcome.converting > 0) {
            if (m == n) {
                report.minimum = ConversionNumber::inconvertible(n);
            } else {
                report.minimum = ConversionNumber::finite(m);
                report.witness = witness_from_rank(required, free_ids, r, *outcome.first_hit_rank);
            }
            return report;
        }
    }
    // The full vertex set always converts, so only a user-lowered size limit
    // can land here.
    throw std::runtime_error("no converting seed of size at most " + std::to_string(size_limit) +
                             "; raise the size limit");
}

std::uint64_t count_converting_sets(const Graph& g, unsigned k, std::size_t size,
                                    const SearchOptions& options) {
    if (k == 0) throw std::invalid_argument("threshold k must be at least 1");
    std::size_t n = g.num_vertices();
    if (size > n) throw std::invalid_argument("seed size exceeds the vertex count");

    VertexSet required = required_low_degree_vertices(g, k);
    if (size < required.count()) return 0;  // such seeds miss a low-degree vertex
    std::vector<VertexId> free_ids;
    for (VertexId v = 0; v < n; ++v)
        if (!required.contains(v)) free_ids.push_back(v);

    std::size_t r = size - required.count();
    std::uint64_t total = binomial_u64(free_ids.size(), r);
    if (total > options.budget) throw BudgetExceededError(total, options.budget);
    return run_size(g, k, free_ids, required, r, total, options.num_threads).converting;
}

}  // namespace thresholdlab
