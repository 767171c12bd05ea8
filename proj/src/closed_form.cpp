#include "thresholdlab/closed_form.hpp"

#include <stdexcept>

namespace thresholdlab {

std::size_t ConversionNumber::value() const {
    if (inconvertible_)
        throw std::logic_error("inconvertible instance has no finite conversion number");
    return seeds_;
}

std::string ConversionNumber::to_string() const {
    if (inconvertible_) return "inconvertible(" + std::to_string(seeds_) + ")";
    return std::to_string(seeds_);
}

namespace {

void check_cycle(std::size_t n, unsigned k) {
    if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (k == 0) throw std::invalid_argument("threshold k must be at least 1");
}

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

}  // namespace

ConversionNumber conv_cycle(std::size_t n, unsigned k) {
    check_cycle(n, k);
    if (k == 1) return ConversionNumber::finite(1);
    if (k == 2) return ConversionNumber::finite(ceil_half(n));
    return ConversionNumber::inconvertible(n);
}

ConversionNumber conv_corona(std::size_t n, std::size_t p, unsigned k) {
    check_cycle(n, k);
    std::size_t num_vertices = n * (p + 1);
    if (p == 0) return conv_cycle(n, k);
    if (k <= p + 1) return ConversionNumber::finite((k - 1) * n + 1);
    if (k == p + 2) return ConversionNumber::finite(p * n + ceil_half(n));
    return ConversionNumber::inconvertible(num_vertices);
}

ConversionNumber conv_double_corona(std::size_t n, std::size_t p, unsigned k) {
    check_cycle(n, k);
    std::size_t num_vertices = n * (p + 2);
    if (k == 1) return ConversionNumber::finite(p >= 1 ? 1 : 2);
    if (p == 0) {
        // Empty blocks leave two disjoint cycles, each needing its own seeds.
        ConversionNumber base = conv_cycle(n, k);
        if (base.is_inconvertible()) return ConversionNumber::inconvertible(num_vertices);
        return ConversionNumber::finite(2 * base.value());
    }
    if (k <= p) return ConversionNumber::finite((k - 2) * n + (3 * n + 3) / 4);
    if (k == p + 1) return ConversionNumber::finite(p * n);
    if (k == p + 2) return ConversionNumber::finite(p * n + 2 * ceil_half(n));
    return ConversionNumber::inconvertible(num_vertices);
}

ConversionNumber reduce_corona(std::size_t n, std::size_t p, unsigned k) {
    check_cycle(n, k);
    std::size_t num_vertices = n * (p + 1);
    if (k == 1) return ConversionNumber::finite(1);
    if (p == 0) return conv_cycle(n, k);
    // Peel one layer: r seeds per block are forced, the rest of the block
    // behaves like a block of size p - r under threshold k - r.
    std::size_t r = std::min<std::size_t>(k - 1, p);
    ConversionNumber rest = reduce_corona(n, p - r, k - static_cast<unsigned>(r));
    if (rest.is_inconvertible()) return ConversionNumber::inconvertible(num_vertices);
    return ConversionNumber::finite(r * n + rest.value());
}

ConversionNumber reduce_double_corona(std::size_t n, std::size_t p, unsigned k) {
    check_cycle(n, k);
    if (k < 2) throw std::invalid_argument("double-corona reduction requires k >= 2");
    std::size_t num_vertices = n * (p + 2);
    if (p == 0) {
        ConversionNumber base = conv_cycle(n, k);
        if (base.is_inconvertible()) return ConversionNumber::inconvertible(num_vertices);
        return ConversionNumber::finite(2 * base.value());
    }
    if (k == 2) {
        // Base case of the peeling: one seed per block region, saving one
        // seed on every fourth cycle position when blocks are large enough.
        return ConversionNumber::finite(p >= 2 ? n - n / 4 : n);
    }
    std::size_t tau = std::min<std::size_t>(k - 2, p);
    ConversionNumber rest = reduce_double_corona(n, p - tau, k - static_cast<unsigned>(tau));
    if (rest.is_inconvertible()) return ConversionNumber::inconvertible(num_vertices);
    return ConversionNumber::finite(tau * n + rest.value());
}

ConversionNumber conversion_number(const FamilySpec& spec, unsigned k) {
    spec.validate();
    switch (spec.family) {
        case Family::Cycle: return conv_cycle(spec.n, k);
        case Family::Corona: return conv_corona(spec.n, spec.p, k);
        case Family::DoubleCorona: return conv_double_corona(spec.n, spec.p, k);
        case Family::Complete:
            throw std::invalid_argument("no closed form is provided for complete graphs");
    }
    throw std::logic_error("unreachable family");
}

}  // namespace thresholdlab
