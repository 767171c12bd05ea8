#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "test_util.hpp"
#include "thresholdlab/dynamics.hpp"
#include "thresholdlab/probability.hpp"
#include "thresholdlab/search.hpp"

using namespace thresholdlab;

TEST_CASE("saturating binomial matches exact arithmetic") {
    CHECK(binomial_u64(0, 0) == 1);
    CHECK(binomial_u64(5, 2) == 10);
    CHECK(binomial_u64(5, 7) == 0);
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t n = 0; n <= 80; ++n)
        for (std::uint64_t r = 0; r <= n; ++r) {
            BigInt exact = big_binomial(n, r);
            std::uint64_t clamped = binomial_u64(n, r);
            if (exact <= BigInt(kMax))
                CHECK(BigInt(clamped) == exact);
            else
                CHECK(clamped == kMax);
        }
    CHECK(binomial_u64(68, 34) == kMax);
    CHECK(binomial_u64(67, 33) < kMax);
}

TEST_CASE("combination iteration agrees with unranking") {
    const std::size_t n = 10, r = 4;
    auto comb = Combinations::first(r);
    std::uint64_t rank = 0;
    do {
        CHECK(Combinations::unrank(n, r, rank) == comb);
        ++rank;
    } while (Combinations::next(comb, n));
    CHECK(rank == binomial_u64(n, r));
    CHECK(Combinations::unrank(6, 0, 0).empty());
}

TEST_CASE("minimum search on known instances") {
    auto corona31 = build_corona(3, 1);
    SearchReport report = brute_force_min(corona31.graph(), 2);
    CHECK(report.minimum == ConversionNumber::finite(4));
    REQUIRE(report.witness.has_value());
    // Lexicographically least: the three forced pendants plus ring vertex 0.
    CHECK(report.witness->ids() == std::vector<VertexId>{0, 3, 4, 5});
    CHECK(is_conversion_set(corona31.graph(), *report.witness, 2));
    CHECK(report.per_size.at(4) == SizeTally{3, 3});

    auto dc35 = build_double_corona(3, 5);
    SearchReport large = brute_force_min(dc35.graph(), 2);
    CHECK(large.minimum == ConversionNumber::finite(3));
    CHECK(large.sets_examined == 21 + 210 + 1330);
    CHECK(large.per_size.at(3).examined == 1330);
    CHECK(large.per_size.at(3).converting > 0);
}

TEST_CASE("inconvertible instances report the full vertex count") {
    Graph c3 = build_cycle(3);
    SearchReport report = brute_force_min(c3, 3);
    CHECK(report.minimum == ConversionNumber::inconvertible(3));
    CHECK_FALSE(report.witness.has_value());
    // All ring vertices sit below the threshold, so only size 3 is scanned.
    CHECK(report.per_size.size() == 1);
    CHECK(report.per_size.at(3) == SizeTally{1, 1});
}

TEST_CASE("counting converting seeds") {
    auto lg = build_corona(3, 1);
    CHECK(count_converting_sets(lg.graph(), 2, 4) == 3);
    CHECK(count_converting_sets(lg.graph(), 2, 5) == 3);
    CHECK(count_converting_sets(lg.graph(), 2, 6) == 1);
    CHECK(count_converting_sets(lg.graph(), 2, 2) == 0);  // misses forced pendants
    CHECK(count_converting_sets(lg.graph(), 3, 5) == 3);
    CHECK_THROWS_AS(count_converting_sets(lg.graph(), 2, 7), std::invalid_argument);
}

TEST_CASE("pruned counting equals the unpruned scan") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 120; ++iter) {
        Graph g = testutil::random_graph(rng, 9);
        unsigned k = std::uniform_int_distribution<unsigned>(1, 3)(rng);
        std::size_t size = std::uniform_int_distribution<std::size_t>(0, g.num_vertices())(rng);

        std::uint64_t direct = 0;
        auto comb = Combinations::first(size);
        bool more = true;
        while (more) {
            direct += is_conversion_set(g, VertexSet::from_ids(g.num_vertices(), comb), k);
            more = Combinations::next(comb, g.num_vertices());
        }
        CHECK(count_converting_sets(g, k, size) == direct);
    }
}

TEST_CASE("counts grow with seed size until the full set") {
    auto lg = build_double_corona(3, 2);
    std::uint64_t previous_ratio_num = 0, previous_ratio_den = 1;
    for (std::size_t size = 1; size <= lg.graph().num_vertices(); ++size) {
        std::uint64_t count = count_converting_sets(lg.graph(), 2, size);
        std::uint64_t total = binomial_u64(lg.graph().num_vertices(), size);
        // The success fraction is monotone: supersets of converting seeds convert.
        CHECK(count * previous_ratio_den >= previous_ratio_num * total);
        previous_ratio_num = count;
        previous_ratio_den = total;
    }
    CHECK(count_converting_sets(lg.graph(), 2, lg.graph().num_vertices()) == 1);
}

TEST_CASE("witnesses always include every low-degree vertex") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 150; ++iter) {
        Graph g = testutil::random_graph(rng, 10);
        if (g.num_vertices() == 0) continue;
        unsigned k = std::uniform_int_distribution<unsigned>(1, 3)(rng);
        SearchReport report = brute_force_min(g, k);
        if (!report.witness) continue;
        CHECK(required_low_degree_vertices(g, k).is_subset_of(*report.witness));
        CHECK(report.witness->count() == report.minimum.value());
        CHECK(is_conversion_set(g, *report.witness, k));
    }
}

TEST_CASE("budget refusals happen before any work") {
    auto lg = build_corona(3, 1);
    SearchOptions tight;
    tight.budget = 5;
    CHECK_THROWS_AS(brute_force_min(lg.graph(), 2, tight), BudgetExceededError);
    try {
        brute_force_min(lg.graph(), 2, tight);
    } catch (const BudgetExceededError& e) {
        CHECK(e.required() == 8);  // sum over sizes 3..6 of C(3, m-3)
        CHECK(e.budget() == 5);
    }
    SearchOptions forbid;
    forbid.budget = 2;
    CHECK_THROWS_AS(count_converting_sets(lg.graph(), 2, 4, forbid), BudgetExceededError);
}

TEST_CASE("size limits cap the scan") {
    auto lg = build_corona(3, 1);
    SearchOptions limited;
    limited.size_limit = 3;
    CHECK_THROWS_AS(brute_force_min(lg.graph(), 2, limited), std::runtime_error);
    limited.size_limit = 4;
    CHECK(brute_force_min(lg.graph(), 2, limited).minimum == ConversionNumber::finite(4));
}

TEST_CASE("worker count never changes the report") {
    auto lg = build_double_corona(4, 2);
    SearchOptions solo, quad;
    solo.num_threads = 1;
    quad.num_threads = 4;
    SearchReport a = brute_force_min(lg.graph(), 2, solo);
    SearchReport b = brute_force_min(lg.graph(), 2, quad);
    CHECK(a.minimum == b.minimum);
    CHECK(a.witness->ids() == b.witness->ids());
    CHECK(a.sets_examined == b.sets_examined);
    CHECK(a.per_size == b.per_size);
    CHECK(count_converting_sets(lg.graph(), 2, 5, solo) ==
          count_converting_sets(lg.graph(), 2, 5, quad));
}

TEST_CASE("degenerate searches") {
    Graph empty = Graph::from_edges(0, {});
    SearchReport report = brute_force_min(empty, 1);
    CHECK(report.minimum == ConversionNumber::finite(0));
    CHECK(report.witness->count() == 0);
    CHECK_THROWS_AS(brute_force_min(empty, 0), std::invalid_argument);
}
