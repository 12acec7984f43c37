#include "lce_index.hpp"

#include <algorithm>

namespace subrep {

namespace {

// Suffix array by rank doubling with counting sorts; O(n log n), deterministic.
std::vector<std::uint32_t> build_suffix_array(const std::vector<std::uint32_t>& s,
                                              std::vector<std::uint32_t>& rank) {
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    std::vector<std::uint32_t> sa(n);
    rank.assign(n, 0);
    if (n == 0) return sa;

    std::uint32_t maxv = 0;
    for (std::uint32_t v : s) maxv = std::max(maxv, v);
    std::vector<std::uint32_t> cnt(std::max(maxv + 2, n + 2), 0);
    for (std::uint32_t v : s) ++cnt[v + 1];
    for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    for (std::uint32_t i = 0; i < n; ++i) rank[i] = cnt[s[i]];
    std::vector<std::uint32_t> tmp(n), nrank(n);
    for (std::uint32_t i = 0; i < n; ++i) sa[i] = i;
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) { return rank[a] < rank[b]; });

    for (std::uint32_t k = 1; k < n; k <<= 1) {
        // tmp := indices sorted by rank of the second half (empty halves first)
        std::uint32_t idx = 0;
        for (std::uint32_t i = n - k; i < n; ++i) tmp[idx++] = i;
        for (std::uint32_t j = 0; j < n; ++j)
            if (sa[j] >= k) tmp[idx++] = sa[j] - k;
        // stable counting sort by rank of the first half
        std::fill(cnt.begin(), cnt.begin() + n + 1, 0);
        for (std::uint32_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
        for (std::uint32_t i = 1; i <= n; ++i) cnt[i] += cnt[i - 1];
        for (std::uint32_t i = 0; i < n; ++i) sa[cnt[rank[tmp[i]]]++] = tmp[i];
        // re-rank
        auto second = [&](std::uint32_t i) -> std::uint64_t {
            return i + k < n ? rank[i + k] + 1 : 0;
        };
        nrank[sa[0]] = 0;
        for (std::uint32_t j = 1; j < n; ++j) {
            const bool same = rank[sa[j]] == rank[sa[j - 1]] && second(sa[j]) == second(sa[j - 1]);
            nrank[sa[j]] = nrank[sa[j - 1]] + (same ? 0 : 1);
        }
        rank.swap(nrank);
        if (rank[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

std::vector<std::uint32_t> build_lcp(const std::vector<std::uint32_t>& s,
                                     const std::vector<std::uint32_t>& sa,
                                     const std::vector<std::uint32_t>& rank) {
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    std::vector<std::uint32_t> lcp(n, 0);
    std::uint32_t h = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const std::uint32_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[rank[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace

void LceIndex::Rmq::build(const std::vector<std::uint32_t>& v) {
    data = &v;
    table.clear();
    const std::uint32_t nb = (static_cast<std::uint32_t>(v.size()) + kBlock - 1) / kBlock;
    if (nb == 0) return;
    table.emplace_back(nb);
    for (std::uint32_t b = 0; b < nb; ++b) {
        std::uint32_t m = UINT32_MAX;
        const std::uint32_t lo = b * kBlock, hi = std::min<std::uint32_t>(lo + kBlock, v.size());
        for (std::uint32_t i = lo; i < hi; ++i) m = std::min(m, v[i]);
        table[0][b] = m;
    }
    for (std::uint32_t lvl = 1; (1u << lvl) <= nb; ++lvl) {
        const std::uint32_t len = nb - (1u << lvl) + 1;
        table.emplace_back(len);
        for (std::uint32_t i = 0; i < len; ++i)
            table[lvl][i] = std::min(table[lvl - 1][i], table[lvl - 1][i + (1u << (lvl - 1))]);
    }
}

std::uint32_t LceIndex::Rmq::query(std::uint32_t l, std::uint32_t r) const {
    const auto& v = *data;
    const std::uint32_t bl = l / kBlock, br = r / kBlock;
    std::uint32_t m = UINT32_MAX;
    if (bl == br) {
        for (std::uint32_t i = l; i <= r; ++i) m = std::min(m, v[i]);
        return m;
    }
    for (std::uint32_t i = l; i < (bl + 1) * kBlock; ++i) m = std::min(m, v[i]);
    for (std::uint32_t i = br * kBlock; i <= r; ++i) m = std::min(m, v[i]);
    if (bl + 1 <= br - 1) {
        const std::uint32_t lo = bl + 1, hi = br - 1;
        const std::uint32_t span = hi - lo + 1;
        const std::uint32_t lvl = 31 - __builtin_clz(span);
        m = std::min(m, std::min(table[lvl][lo], table[lvl][hi - (1u << lvl) + 1]));
    }
    return m;
}

void LceIndex::Direction::build(const std::vector<std::uint32_t>& symbols) {
    n = static_cast<std::uint32_t>(symbols.size());
    sa = build_suffix_array(symbols, rank);
    lcp = build_lcp(symbols, sa, rank);
    rmq.build(lcp);
}

std::uint32_t LceIndex::Direction::lce(std::uint32_t i0, std::uint32_t j0) const {
    if (i0 == j0) return n - i0;
    std::uint32_t ri = rank[i0], rj = rank[j0];
    if (ri > rj) std::swap(ri, rj);
    return rmq.query(ri + 1, rj);
}

LceIndex::LceIndex(const Word& w) : n_(w.size()) {
    std::vector<std::uint32_t> s(w.symbols().begin(), w.symbols().end());
    fwd_.build(s);
    std::reverse(s.begin(), s.end());
    bwd_.build(s);
}

void LceIndex::check(std::uint32_t pos) const {
    if (pos < 1 || pos > n_)
        throw PositionError("position " + std::to_string(pos) + " outside 1.." + std::to_string(n_));
}

std::uint32_t LceIndex::lce_forward(std::uint32_t i, std::uint32_t j) const {
    check(i);
    check(j);
    return fwd_.lce(i - 1, j - 1);
}

std::uint32_t LceIndex::lce_backward(std::uint32_t i, std::uint32_t j) const {
    check(i);
    check(j);
    // position i of w is position n-i+1 of the reversal, 0-based n-i
    return bwd_.lce(n_ - i, n_ - j);
}

std::uint32_t LceIndex::suffix_rank(std::uint32_t i) const {
    check(i);
    return fwd_.rank[i - 1];
}

}  // namespace subrep
