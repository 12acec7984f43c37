#include "runs.hpp"

#include <algorithm>

namespace subrep {

std::vector<Run> compute_runs(const Word& w, const LceIndex& idx) {
    const std::uint32_t n = w.size();
    std::vector<Run> cand;
    if (n < 2) return {};
    // For every period p, anchors at multiples of p. A run with minimal
    // period p' has a match interval of length >= p at every multiple p = j*p'
    // up to |r|/2, and that interval always contains an anchor, so each run is
    // found at p = p' (and rediscovered at larger multiples, which the
    // (beg,end) grouping folds away).
    for (std::uint32_t p = 1; 2 * p <= n; ++p) {
        std::uint32_t prev_beg = 0;
        for (std::uint32_t q = p; q + p <= n; q += p) {
            if (w.at(q) != w.at(q + p)) continue;
            const std::uint32_t f = idx.lce_forward(q, q + p);
            const std::uint32_t b = q > 1 ? idx.lce_backward(q - 1, q + p - 1) : 0;
            const std::uint32_t c = f + b;
            if (c < p) continue;
            const std::uint32_t beg = q - b;
            if (beg == prev_beg) continue;
            prev_beg = beg;
            cand.push_back({beg, beg + p + c - 1, p, 0, -1});
        }
    }
    std::sort(cand.begin(), cand.end(), [](const Run& a, const Run& b) {
        return std::make_tuple(a.beg, a.end, a.p) < std::make_tuple(b.beg, b.end, b.p);
    });
    // keep the minimal period of each (beg, end) factor
    std::vector<Run> out;
    for (const Run& r : cand)
        if (out.empty() || out.back().beg != r.beg || out.back().end != r.end) out.push_back(r);
    return out;
}

std::uint32_t lyndon_offset(const Word& w, std::uint32_t beg, std::uint32_t p) {
    if (p == 1) return 0;
    // Booth's least-rotation algorithm over the doubled root.
    std::vector<std::uint32_t> s(2 * p);
    for (std::uint32_t i = 0; i < p; ++i) s[i] = s[i + p] = w.at(beg + i);
    std::vector<std::int64_t> f(2 * p, -1);
    std::uint32_t k = 0;
    for (std::uint32_t j = 1; j < 2 * p; ++j) {
        const std::uint32_t sj = s[j];
        std::int64_t i = f[j - k - 1];
        while (i != -1 && sj != s[k + i + 1]) {
            if (sj < s[k + i + 1]) k = j - static_cast<std::uint32_t>(i) - 1;
            i = f[i];
        }
        if (sj != s[k + i + 1]) {
            if (sj < s[k]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % p;
}

RunGroups group_runs(std::vector<Run>& runs, const LceIndex& idx) {
    const std::uint32_t m = static_cast<std::uint32_t>(runs.size());
    std::vector<std::uint32_t> order(m);
    for (std::uint32_t i = 0; i < m; ++i) order[i] = i;
    // Runs with equal roots end up adjacent: sort by (p, rank of the Lyndon
    // root position) and merge neighbours whose roots match.
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const Run &ra = runs[a], &rb = runs[b];
        if (ra.p != rb.p) return ra.p < rb.p;
        return idx.suffix_rank(ra.beg + ra.a) < idx.suffix_rank(rb.beg + rb.a);
    });
    RunGroups g;
    for (std::uint32_t oi = 0; oi < m; ++oi) {
        const std::uint32_t ri = order[oi];
        bool fresh = true;
        if (oi > 0) {
            const Run& prev = runs[order[oi - 1]];
            const Run& cur = runs[ri];
            fresh = prev.p != cur.p ||
                    idx.lce_forward(prev.beg + prev.a, cur.beg + cur.a) < cur.p;
        }
        if (fresh) g.prsr.emplace_back();
        runs[ri].group = static_cast<std::int32_t>(g.prsr.size()) - 1;
        g.prsr.back().push_back(ri);
    }
    for (auto& grp : g.prsr)
        std::sort(grp.begin(), grp.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return runs[a].beg < runs[b].beg; });
    // LRSR: bucket by length, ties by starting position.
    g.lrsr = g.prsr;
    for (auto& grp : g.lrsr)
        std::stable_sort(grp.begin(), grp.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return runs[a].len() < runs[b].len(); });
    return g;
}

WordAnalysis analyze(const Word& w, const LceIndex& idx) {
    WordAnalysis a;
    a.word = w;
    a.n = w.size();
    a.runs = compute_runs(w, idx);
    for (Run& r : a.runs) r.a = lyndon_offset(w, r.beg, r.p);
    a.groups = group_runs(a.runs, idx);
    return a;
}

WordAnalysis mirror_analysis(const WordAnalysis& fwd) {
    const std::uint32_t n = fwd.n;
    WordAnalysis rev;
    rev.word = fwd.word.reversed();
    rev.n = n;
    rev.runs.reserve(fwd.runs.size());
    for (const Run& r : fwd.runs) {
        Run m;
        m.beg = n - r.end + 1;
        m.end = n - r.beg + 1;
        m.p = r.p;
        m.a = lyndon_offset(rev.word, m.beg, m.p);
        m.group = r.group;
        rev.runs.push_back(m);
    }
    rev.groups.prsr = fwd.groups.prsr;
    for (auto& grp : rev.groups.prsr) std::reverse(grp.begin(), grp.end());
    rev.groups.lrsr = rev.groups.prsr;
    for (auto& grp : rev.groups.lrsr)
        std::stable_sort(grp.begin(), grp.end(), [&](std::uint32_t a, std::uint32_t b) {
            return rev.runs[a].len() < rev.runs[b].len();
        });
    return rev;
}

}  // namespace subrep
