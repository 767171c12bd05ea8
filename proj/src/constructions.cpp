#include "thresholdlab/constructions.hpp"

#include <stdexcept>
#include <string>

#include "thresholdlab/closed_form.hpp"

namespace thresholdlab {

namespace {

constexpr const char* kAlphabet = "BIOMTC";

// Canonical double-corona ids without building the graph.
VertexId inner_id(std::size_t /*n*/, std::size_t i) { return i - 1; }
VertexId outer_id(std::size_t n, std::size_t i) { return n + i - 1; }
VertexId block_id(std::size_t n, std::size_t p, std::size_t i, std::size_t j) {
    return 2 * n + (i - 1) * p + (j - 1);
}

// Cycle positions (0-based, shifted by offset) forming a minimum threshold-2
// seed: every other vertex for even n; for odd n one adjacent pair bridges
// the wrap-around.
void add_alternating_cycle(VertexSet& seed, std::size_t n, std::size_t offset) {
    if (n % 2 == 0) {
        for (std::size_t i = 0; i < n; i += 2) seed.add(offset + i);
    } else {
        seed.add(offset);
        for (std::size_t i = 1; i + 1 < n; i += 2) seed.add(offset + i);
    }
}

// Writes pattern letters onto a double-corona seed; M places a block vertex
// into slot m_slot (and T into slots m_slot, m_slot+1).
void apply_pattern(VertexSet& seed, const BlockPattern& pattern, std::size_t n, std::size_t p,
                   std::size_t m_slot) {
    for (std::size_t i = 1; i <= n; ++i) {
        switch (pattern.letter_at(i)) {
            case 'B':
                break;
            case 'I':
                seed.add(inner_id(n, i));
                break;
            case 'O':
                seed.add(outer_id(n, i));
                break;
            case 'M':
                if (m_slot > p) throw std::invalid_argument("pattern letter M needs a nonempty block");
                seed.add(block_id(n, p, i, m_slot));
                break;
            case 'T':
                if (m_slot + 1 > p) throw std::invalid_argument("pattern letter T needs two block vertices");
                seed.add(block_id(n, p, i, m_slot));
                seed.add(block_id(n, p, i, m_slot + 1));
                break;
            case 'C':
                seed.add(inner_id(n, i));
                seed.add(outer_id(n, i));
                for (std::size_t j = 1; j <= p; ++j) seed.add(block_id(n, p, i, j));
                break;
        }
    }
}

}  // namespace

BlockPattern BlockPattern::parse(std::string labels) {
    if (labels.empty()) throw std::invalid_argument("pattern must not be empty");
    for (char c : labels)
        if (std::string(kAlphabet).find(c) == std::string::npos)
            throw std::invalid_argument(std::string("pattern letter '") + c +
                                        "' is not one of B, I, O, M, T, C");
    return BlockPattern(std::move(labels));
}

VertexSet pattern_to_seed(const BlockPattern& pattern, std::size_t n, std::size_t p) {
    if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
    VertexSet seed(n * (p + 2));
    apply_pattern(seed, pattern, n, p, 1);
    return seed;
}

BlockPattern seed_to_pattern(const VertexSet& seed, std::size_t n, std::size_t p) {
    if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (seed.universe() != n * (p + 2))
        throw std::invalid_argument("seed universe does not match the double corona");
    std::string labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        bool has_inner = seed.contains(inner_id(n, i));
        bool has_outer = seed.contains(outer_id(n, i));
        std::size_t block_count = 0;
        for (std::size_t j = 1; j <= p; ++j)
            block_count += seed.contains(block_id(n, p, i, j));
        std::size_t total = block_count + has_inner + has_outer;
        if (total == p + 2)
            labels += 'C';
        else if (total == 0)
            labels += 'B';
        else if (total == 1)
            labels += has_inner ? 'I' : (has_outer ? 'O' : 'M');
        else if (total == 2 && block_count == 2)
            labels += 'T';
        else
            throw std::invalid_argument("position " + std::to_string(i) + " holds " +
                                        std::to_string(total) +
                                        " seeds; only 0, 1, two block vertices, or the whole "
                                        "closed block are representable");
    }
    return BlockPattern::parse(std::move(labels));
}

BlockPattern canonical_double_corona_pattern(std::size_t n, std::size_t p) {
    if (n < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (p == 0)
        throw std::invalid_argument("no block-pattern form exists for empty blocks; "
                                    "seed both cycles alternately instead");
    std::string labels;
    labels.reserve(n);
    if (p == 1) {
        // Inner/outer alternation; odd cycles finish with one block vertex.
        for (std::size_t i = 0; i < n / 2; ++i) labels += "IO";
        if (n % 2 == 1) labels += 'M';
    } else {
        static constexpr const char* kWheel = "MOMB";
        for (std::size_t i = 0; i < n; ++i) labels += kWheel[i % 4];
    }
    return BlockPattern::parse(std::move(labels));
}

VertexSet canonical_cycle_seed(std::size_t n, unsigned k) {
    ConversionNumber target = conv_cycle(n, k);
    if (target.is_inconvertible())
        throw std::invalid_argument("instance is inconvertible; no seed below the full set converts");
    VertexSet seed(n);
    if (k == 1)
        seed.add(0);
    else
        add_alternating_cycle(seed, n, 0);
    return seed;
}

VertexSet canonical_corona_seed(std::size_t n, std::size_t p, unsigned k) {
    ConversionNumber target = conv_corona(n, p, k);
    if (target.is_inconvertible())
        throw std::invalid_argument("instance is inconvertible; no seed below the full set converts");
    VertexSet seed(n * (p + 1));
    auto corona_block_id = [&](std::size_t i, std::size_t j) { return n + (i - 1) * p + (j - 1); };
    if (k <= p + 1) {
        // One cycle vertex ignites the ring once every block supplies k-1.
        seed.add(0);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j + 1 <= k; ++j) seed.add(corona_block_id(i, j));
    } else {
        // k == p + 2: whole blocks plus an alternating cycle seed.
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= p; ++j) seed.add(corona_block_id(i, j));
        add_alternating_cycle(seed, n, 0);
    }
    return seed;
}

VertexSet canonical_double_corona_seed(std::size_t n, std::size_t p, unsigned k) {
    ConversionNumber target = conv_double_corona(n, p, k);
    if (target.is_inconvertible())
        throw std::invalid_argument("instance is inconvertible; no seed below the full set converts");
    VertexSet seed(n * (p + 2));
    if (k == 1) {
        seed.add(inner_id(n, 1));
        if (p == 0) seed.add(outer_id(n, 1));  // without blocks the outer cycle is disconnected
        return seed;
    }
    // Finite and k >= 2 imply k - 2 <= p. Fill every block up to depth k - 2,
    // which reduces the instance to the residual block size below.
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j + 2 <= k; ++j) seed.add(block_id(n, p, i, j));
    std::size_t residual = p - (k - 2);
    if (residual >= 1) {
        apply_pattern(seed, canonical_double_corona_pattern(n, residual), n, p, k - 1);
    } else {
        add_alternating_cycle(seed, n, 0);
        add_alternating_cycle(seed, n, n);
    }
    return seed;
}

VertexSet canonical_seed(const FamilySpec& spec, unsigned k) {
    spec.validate();
    switch (spec.family) {
        case Family::Cycle: return canonical_cycle_seed(spec.n, k);
        case Family::Corona: return canonical_corona_seed(spec.n, spec.p, k);
        case Family::DoubleCorona: return canonical_double_corona_seed(spec.n, spec.p, k);
        case Family::Complete:
            throw std::invalid_argument("no canonical seed construction for complete graphs");
    }
    throw std::logic_error("unreachable family");
}

}  // namespace thresholdlab
