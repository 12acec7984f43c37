#pragma once

#include <cstdint>
#include <vector>

#include "word.hpp"

namespace subrep {

// Longest-common-extension index: suffix array + LCP + range minimum over the
// word and its reversal. Queries are O(1) up to a short in-block scan.
// Immutable after construction; concurrent reads are safe.
class LceIndex {
public:
    explicit LceIndex(const Word& w);

    std::uint32_t size() const { return n_; }

    // Largest k with w[i..i+k-1] = w[j..j+k-1]. Positions are 1-based.
    std::uint32_t lce_forward(std::uint32_t i, std::uint32_t j) const;
    // Largest k with w[i-k+1..i] = w[j-k+1..j].
    std::uint32_t lce_backward(std::uint32_t i, std::uint32_t j) const;

    // Rank of the suffix starting at 1-based position i (0-based rank).
    std::uint32_t suffix_rank(std::uint32_t i) const;

private:
    struct Rmq {
        // minimum over a static array, 16-wide blocks + sparse table of block minima
        void build(const std::vector<std::uint32_t>& v);
        std::uint32_t query(std::uint32_t l, std::uint32_t r) const;  // inclusive

        const std::vector<std::uint32_t>* data = nullptr;
        std::vector<std::vector<std::uint32_t>> table;
        static constexpr std::uint32_t kBlock = 16;
    };

    struct Direction {
        void build(const std::vector<std::uint32_t>& symbols);
        std::uint32_t lce(std::uint32_t i0, std::uint32_t j0) const;  // 0-based suffix positions

        std::uint32_t n = 0;
        std::vector<std::uint32_t> sa;
        std::vector<std::uint32_t> rank;
        std::vector<std::uint32_t> lcp;  // lcp[r] = LCP(sa[r-1], sa[r]), r in 1..n-1
        Rmq rmq;
    };

    void check(std::uint32_t pos) const;

    std::uint32_t n_ = 0;
    Direction fwd_;
    Direction bwd_;
};

}  // namespace subrep
