// Subset of a fixed vertex universe, backed by a 64-bit word vector.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "thresholdlab/graph.hpp"

namespace thresholdlab {

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<VertexId> ids) {
        VertexSet s(universe);
        for (VertexId v : ids) s.add(v);
        return s;
    }

    template <typename Range>
    static VertexSet from_ids(std::size_t universe, const Range& ids) {
        VertexSet s(universe);
        for (VertexId v : ids) s.add(v);
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    std::size_t universe() const { return universe_; }
    bool empty() const { return count() == 0; }

    std::size_t count() const {
        std::size_t total = 0;
        for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool contains(VertexId v) const {
        check(v);
        return (words_[v / 64] >> (v % 64)) & 1ULL;
    }

    void add(VertexId v) {
        check(v);
        words_[v / 64] |= 1ULL << (v % 64);
    }

    void remove(VertexId v) {
        check(v);
        words_[v / 64] &= ~(1ULL << (v % 64));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_same(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_same(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    std::vector<VertexId> ids() const {
        std::vector<VertexId> out;
        out.reserve(count());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool operator==(const VertexSet&) const = default;

private:
    void check(VertexId v) const {
        if (v >= universe_) throw std::out_of_range("vertex id outside universe");
    }
    void check_same(const VertexSet& other) const {
        if (universe_ != other.universe_)
            throw std::invalid_argument("vertex sets live in different universes");
    }
    void trim() {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (1ULL << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace thresholdlab
