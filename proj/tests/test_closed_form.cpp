#include <doctest.h>

#include <stdexcept>

#include "thresholdlab/closed_form.hpp"

using namespace thresholdlab;

TEST_CASE("conversion number accessors") {
    ConversionNumber finite = ConversionNumber::finite(11);
    CHECK(finite.is_finite());
    CHECK(finite.value() == 11);
    CHECK(finite.seeds_required() == 11);
    CHECK(finite.to_string() == "11");

    ConversionNumber stuck = ConversionNumber::inconvertible(9);
    CHECK(stuck.is_inconvertible());
    CHECK(stuck.seeds_required() == 9);
    CHECK(stuck.to_string() == "inconvertible(9)");
    CHECK_THROWS_AS(stuck.value(), std::logic_error);
}

TEST_CASE("cycle conversion numbers") {
    for (std::size_t n = 3; n <= 20; ++n) {
        CHECK(conv_cycle(n, 1) == ConversionNumber::finite(1));
        CHECK(conv_cycle(n, 2) == ConversionNumber::finite((n + 1) / 2));
        CHECK(conv_cycle(n, 3) == ConversionNumber::inconvertible(n));
        CHECK(conv_cycle(n, 9) == ConversionNumber::inconvertible(n));
    }
    CHECK_THROWS_AS(conv_cycle(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(conv_cycle(5, 0), std::invalid_argument);
}

TEST_CASE("figure-scale corona and double-corona values") {
    CHECK(conv_corona(5, 3, 3) == ConversionNumber::finite(11));
    CHECK(conv_corona(9, 4, 6) == ConversionNumber::finite(41));
    CHECK(conv_double_corona(3, 5, 2) == ConversionNumber::finite(3));
    CHECK(conv_double_corona(4, 3, 4) == ConversionNumber::finite(12));
    CHECK(conv_double_corona(7, 1, 3) == ConversionNumber::finite(15));
}

TEST_CASE("corona regimes by threshold") {
    // n = 3, p = 1: one seed, then (k-1)n+1, then pn + ceil(n/2), then stuck.
    CHECK(conv_corona(3, 1, 1) == ConversionNumber::finite(1));
    CHECK(conv_corona(3, 1, 2) == ConversionNumber::finite(4));
    CHECK(conv_corona(3, 1, 3) == ConversionNumber::finite(5));
    CHECK(conv_corona(3, 1, 4) == ConversionNumber::inconvertible(6));
    CHECK(conv_corona(3, 1, 5) == ConversionNumber::inconvertible(6));

    for (std::size_t n = 3; n <= 12; ++n)
        for (unsigned k = 1; k <= 6; ++k)
            CHECK(conv_corona(n, 0, k) == conv_cycle(n, k));
}

TEST_CASE("double-corona regimes by threshold") {
    CHECK(conv_double_corona(4, 3, 1) == ConversionNumber::finite(1));
    CHECK(conv_double_corona(4, 3, 2) == ConversionNumber::finite(3));
    CHECK(conv_double_corona(4, 3, 3) == ConversionNumber::finite(7));
    CHECK(conv_double_corona(4, 3, 4) == ConversionNumber::finite(12));
    CHECK(conv_double_corona(4, 3, 5) == ConversionNumber::finite(16));
    CHECK(conv_double_corona(4, 3, 6) == ConversionNumber::inconvertible(20));

    // Empty blocks leave two disjoint cycles.
    CHECK(conv_double_corona(5, 0, 1) == ConversionNumber::finite(2));
    for (std::size_t n = 3; n <= 12; ++n) {
        CHECK(conv_double_corona(n, 0, 2) == ConversionNumber::finite(2 * ((n + 1) / 2)));
        CHECK(conv_double_corona(n, 0, 3) == ConversionNumber::inconvertible(2 * n));
    }
    for (std::size_t p = 1; p <= 6; ++p)
        CHECK(conv_double_corona(6, p, 1) == ConversionNumber::finite(1));
}

TEST_CASE("reductions recompute the closed forms") {
    for (std::size_t n = 3; n <= 8; ++n)
        for (std::size_t p = 0; p <= 5; ++p)
            for (unsigned k = 1; k <= static_cast<unsigned>(p) + 4; ++k) {
                CHECK(reduce_corona(n, p, k) == conv_corona(n, p, k));
                if (k >= 2)
                    CHECK(reduce_double_corona(n, p, k) == conv_double_corona(n, p, k));
            }
    CHECK_THROWS_AS(reduce_double_corona(4, 2, 1), std::invalid_argument);
}

TEST_CASE("seed requirement never drops as the threshold rises") {
    for (std::size_t n = 3; n <= 10; ++n)
        for (std::size_t p = 0; p <= 5; ++p)
            for (unsigned k = 1; k <= static_cast<unsigned>(p) + 4; ++k) {
                CHECK(conv_corona(n, p, k).seeds_required() <=
                      conv_corona(n, p, k + 1).seeds_required());
                CHECK(conv_double_corona(n, p, k).seeds_required() <=
                      conv_double_corona(n, p, k + 1).seeds_required());
            }
}

TEST_CASE("three-quarter floor identity") {
    for (std::size_t n = 3; n <= 2000; ++n) CHECK((3 * n + 3) / 4 == n - n / 4);
}

TEST_CASE("family dispatch") {
    CHECK(conversion_number({Family::Cycle, 7, 0}, 2) == ConversionNumber::finite(4));
    CHECK(conversion_number({Family::Corona, 5, 3}, 3) == ConversionNumber::finite(11));
    CHECK(conversion_number({Family::DoubleCorona, 7, 1}, 3) == ConversionNumber::finite(15));
    CHECK_THROWS_AS(conversion_number({Family::Complete, 0, 4}, 2), std::invalid_argument);
}
