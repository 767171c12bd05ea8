#include <doctest.h>

#include <random>
#include <string>

#include "test_util.hpp"
#include "thresholdlab/closed_form.hpp"
#include "thresholdlab/constructions.hpp"
#include "thresholdlab/dynamics.hpp"

using namespace thresholdlab;

TEST_CASE("canonical cycle seeds") {
    CHECK(canonical_cycle_seed(5, 1).ids() == std::vector<VertexId>{0});
    CHECK(canonical_cycle_seed(5, 2).ids() == std::vector<VertexId>{0, 1, 3});
    CHECK(canonical_cycle_seed(6, 2).ids() == std::vector<VertexId>{0, 2, 4});
    CHECK_THROWS_AS(canonical_cycle_seed(5, 3), std::invalid_argument);
}

TEST_CASE("pattern parsing and placement") {
    CHECK(BlockPattern::parse("MOMB").labels() == "MOMB");
    CHECK_THROWS_AS(BlockPattern::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BlockPattern::parse("MOXB"), std::invalid_argument);

    // ids in C_4 (..) K_2: inner 0..3, outer 4..7, block i at 8 + 2(i-1).
    VertexSet seed = pattern_to_seed(BlockPattern::parse("MOMB"), 4, 2);
    CHECK(seed.ids() == std::vector<VertexId>{5, 8, 12});

    // Shorter patterns repeat cyclically around the ring.
    CHECK(pattern_to_seed(BlockPattern::parse("MOMB"), 7, 2) ==
          pattern_to_seed(BlockPattern::parse("MOMBMOM"), 7, 2));

    CHECK_THROWS_AS(pattern_to_seed(BlockPattern::parse("M"), 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(pattern_to_seed(BlockPattern::parse("T"), 4, 1), std::invalid_argument);
}

TEST_CASE("threshold-2 pattern families") {
    CHECK(canonical_double_corona_pattern(4, 2).labels() == "MOMB");
    CHECK(canonical_double_corona_pattern(7, 3).labels() == "MOMBMOM");
    CHECK(canonical_double_corona_pattern(6, 1).labels() == "IOIOIO");
    CHECK(canonical_double_corona_pattern(5, 1).labels() == "IOIOM");
    CHECK(canonical_double_corona_pattern(3, 1).labels() == "IOM");
    CHECK_THROWS_AS(canonical_double_corona_pattern(5, 0), std::invalid_argument);

    for (std::size_t n = 3; n <= 12; ++n)
        for (std::size_t p = 1; p <= 4; ++p) {
            BlockPattern pattern = canonical_double_corona_pattern(n, p);
            CHECK(pattern.length() == n);
            VertexSet seed = pattern_to_seed(pattern, n, p);
            CHECK(seed.count() == conv_double_corona(n, p, 2).value());
            CHECK(is_conversion_set(build_double_corona(n, p).graph(), seed, 2));
        }
}

TEST_CASE("patterns round-trip through seeds") {
    std::mt19937_64 rng(99);
    const std::string alphabet = "BIOMTC";
    for (int iter = 0; iter < 1200; ++iter) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(3, 9)(rng);
        std::size_t p = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
        std::string labels;
        for (std::size_t i = 0; i < n; ++i)
            labels += alphabet[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
        BlockPattern pattern = BlockPattern::parse(labels);
        CHECK(seed_to_pattern(pattern_to_seed(pattern, n, p), n, p) == pattern);
    }
}

TEST_CASE("unrepresentable seeds are rejected with the offending position") {
    std::size_t n = 4, p = 2;
    VertexSet three_in_block(n * (p + 2));
    three_in_block.add(0);   // Inner(1)
    three_in_block.add(4);   // Outer(1)
    three_in_block.add(8);   // Block(1,1) — but not the whole closed block
    CHECK_THROWS_WITH_AS(seed_to_pattern(three_in_block, n, p),
                         doctest::Contains("position 1"), std::invalid_argument);

    VertexSet inner_outer(n * (p + 2));
    inner_outer.add(1);  // Inner(2)
    inner_outer.add(5);  // Outer(2)
    CHECK_THROWS_AS(seed_to_pattern(inner_outer, n, p), std::invalid_argument);

    // With empty blocks the inner+outer pair is the whole closed block.
    VertexSet whole(3 * 2);
    whole.add(0);
    whole.add(3);
    CHECK(seed_to_pattern(whole, 3, 0).labels() == "CBB");

    CHECK_THROWS_AS(seed_to_pattern(VertexSet(7), 3, 0), std::invalid_argument);
}

TEST_CASE("three seeds ignite a large-block double corona") {
    auto lg = build_double_corona(3, 5);
    VertexSet seed = pattern_to_seed(BlockPattern::parse("MOM"), 3, 5);
    ProcessTrace trace = run(lg.graph(), seed, 2);
    CHECK(trace.converted);
    CHECK(trace.step_count() == 5);
    CHECK(seed.count() == conv_double_corona(3, 5, 2).value());
}

TEST_CASE("canonical seeds hit the closed form and convert") {
    for (std::size_t n = 3; n <= 8; ++n)
        for (std::size_t p = 0; p <= 3; ++p)
            for (unsigned k = 1; k <= static_cast<unsigned>(p) + 3; ++k) {
                ConversionNumber corona = conv_corona(n, p, k);
                if (corona.is_finite()) {
                    VertexSet seed = canonical_corona_seed(n, p, k);
                    CHECK(seed.count() == corona.value());
                    CHECK(is_conversion_set(build_corona(n, p).graph(), seed, k));
                } else {
                    CHECK_THROWS_AS(canonical_corona_seed(n, p, k), std::invalid_argument);
                }
                ConversionNumber twin = conv_double_corona(n, p, k);
                if (twin.is_finite()) {
                    VertexSet seed = canonical_double_corona_seed(n, p, k);
                    CHECK(seed.count() == twin.value());
                    CHECK(is_conversion_set(build_double_corona(n, p).graph(), seed, k));
                } else {
                    CHECK_THROWS_AS(canonical_double_corona_seed(n, p, k), std::invalid_argument);
                }
            }
}

TEST_CASE("family dispatch for canonical seeds") {
    CHECK(canonical_seed({Family::Cycle, 6, 0}, 2).count() == 3);
    CHECK(canonical_seed({Family::Corona, 5, 3}, 3).count() == 11);
    CHECK(canonical_seed({Family::DoubleCorona, 4, 3}, 4).count() == 12);
    CHECK_THROWS_AS(canonical_seed({Family::Complete, 0, 5}, 2), std::invalid_argument);
}

TEST_CASE("converting seeds reduce to one-seed-per-position form at threshold 2") {
    // Any random converting seed admits a no-larger converting seed that puts
    // at most one colored vertex near each ring position; verified by
    // exhausting the B/I/O/M placements.
    std::mt19937_64 rng(512);
    int collected = 0;
    while (collected < 60) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(3, 5)(rng);
        std::size_t p = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
        auto lg = build_double_corona(n, p);
        VertexSet seed = testutil::random_subset(rng, lg.graph().num_vertices());
        if (!is_conversion_set(lg.graph(), seed, 2)) continue;
        ++collected;

        bool found = false;
        std::string labels(n, 'B');
        const char choices[] = {'B', 'I', 'O', 'M'};
        for (std::size_t code = 0; !found && code < std::size_t(1) << (2 * n); ++code) {
            std::size_t weight = 0;
            for (std::size_t i = 0; i < n; ++i) {
                labels[i] = choices[(code >> (2 * i)) & 3];
                weight += labels[i] != 'B';
            }
            if (weight > seed.count()) continue;
            found = is_conversion_set(lg.graph(),
                                      pattern_to_seed(BlockPattern::parse(labels), n, p), 2);
        }
        CHECK(found);
    }
}
