#include "repeats.hpp"

#include <algorithm>

namespace subrep {

std::vector<MaxRepeat> compute_gapped_repeats(const Word& w, const LceIndex& idx, const Delta& delta) {
    const std::uint32_t n = w.size();
    std::vector<MaxRepeat> out;
    if (n < 3) return out;  // a gapped repeat needs p >= 2 and c >= 1
    const std::uint64_t num = delta.num(), den = delta.den();
    for (std::uint32_t p = 2; p < n; ++p) {
        const std::uint64_t want = (static_cast<std::uint64_t>(p) * num + den - 1) / den;
        if (want >= p) continue;  // no c with want <= c < p, nothing alpha-gapped here
        const std::uint32_t step = static_cast<std::uint32_t>(std::max<std::uint64_t>(1, want));
        std::uint32_t prev_beg = 0;
        for (std::uint32_t q = step; q + p <= n; q += step) {
            if (w.at(q) != w.at(q + p)) continue;
            const std::uint32_t f = idx.lce_forward(q, q + p);
            const std::uint32_t b = q > 1 ? idx.lce_backward(q - 1, q + p - 1) : 0;
            const std::uint32_t beg = q - b;
            if (beg == prev_beg) continue;
            prev_beg = beg;
            const std::uint32_t c = f + b;
            if (c >= p) continue;  // overlapped, handled through runs
            if (!delta.alpha_gapped(p, c)) continue;
            out.push_back({beg, p, c});
        }
    }
    // candidates arrive ordered by (p, beg); one stable pass by beg finishes
    // the (beg, p) order
    std::vector<std::uint32_t> cnt(n + 2, 0);
    for (const MaxRepeat& r : out) ++cnt[r.beg + 1];
    for (std::uint32_t i = 1; i <= n + 1; ++i) cnt[i] += cnt[i - 1];
    std::vector<MaxRepeat> sorted(out.size());
    for (const MaxRepeat& r : out) sorted[cnt[r.beg]++] = r;
    return sorted;
}

std::vector<AnnotatedRepeat> generated_repeats(const Run& r, const Delta& delta) {
    std::vector<AnnotatedRepeat> out;
    const std::uint32_t len = r.len();
    for (std::uint32_t p = r.p; p < len; p += r.p) {
        const std::uint32_t c = len - p;
        if (c >= p) continue;  // overlapped
        if (!delta.alpha_gapped(p, c)) continue;
        out.push_back({{r.beg, p, c}, r.p, Provenance::generated, PsiType::none});
    }
    return out;
}

std::vector<ListedRepeat> reprincipal_repeats(const std::vector<Run>& runs) {
    std::vector<ListedRepeat> out;
    out.reserve(runs.size());
    for (const Run& r : runs)
        out.push_back({{r.beg, r.p, r.len() - r.p}, 0, kFlagReprincipal});
    return out;
}

PositionLists PositionLists::build(std::uint32_t n, std::vector<ListedRepeat> entries) {
    PositionLists pl;
    pl.n_ = n;
    // two-pass bucket sort: stable by period, then by start position
    std::vector<std::uint32_t> cnt(n + 2, 0);
    std::vector<ListedRepeat> tmp(entries.size());
    for (const auto& e : entries) ++cnt[e.rep.p + 1];
    for (std::uint32_t i = 1; i <= n + 1; ++i) cnt[i] += cnt[i - 1];
    for (const auto& e : entries) tmp[cnt[e.rep.p]++] = e;
    std::fill(cnt.begin(), cnt.end(), 0);
    for (const auto& e : tmp) ++cnt[e.rep.beg + 1];
    for (std::uint32_t i = 1; i <= n + 1; ++i) cnt[i] += cnt[i - 1];
    entries.resize(tmp.size());
    for (const auto& e : tmp) entries[cnt[e.rep.beg]++] = e;
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].rep.key() == entries[i - 1].rep.key())
            throw DuplicateRepeatError("duplicate repeat key (" + std::to_string(entries[i].rep.beg) +
                                       ", " + std::to_string(entries[i].rep.p) + ")");
    pl.entries_ = std::move(entries);
    pl.bucket_begin_.assign(n + 2, 0);
    for (const auto& e : pl.entries_) ++pl.bucket_begin_[e.rep.beg + 1];
    for (std::uint32_t i = 1; i <= n + 1; ++i) pl.bucket_begin_[i] += pl.bucket_begin_[i - 1];
    return pl;
}

PositionLists merge_by_key(const PositionLists& a, const PositionLists& b, MergeOp op,
                           std::uint8_t mark_flag) {
    const auto av = a.all();
    const auto bv = b.all();
    std::vector<ListedRepeat> out;
    std::size_t i = 0, j = 0;
    while (i < av.size() || j < bv.size()) {
        if (j >= bv.size() || (i < av.size() && av[i].rep.key() < bv[j].rep.key())) {
            if (op == MergeOp::difference || op == MergeOp::set_union || op == MergeOp::mark)
                out.push_back(av[i]);
            ++i;
        } else if (i >= av.size() || bv[j].rep.key() < av[i].rep.key()) {
            if (op == MergeOp::set_union) out.push_back(bv[j]);
            ++j;
        } else {
            switch (op) {
                case MergeOp::difference: break;
                case MergeOp::intersection: out.push_back(av[i]); break;
                case MergeOp::set_union: {
                    ListedRepeat e = av[i];
                    e.flags |= bv[j].flags;
                    if (e.q == 0) e.q = bv[j].q;
                    out.push_back(e);
                    break;
                }
                case MergeOp::mark: {
                    ListedRepeat e = av[i];
                    e.flags |= mark_flag;
                    if (e.q == 0) e.q = bv[j].q;
                    out.push_back(e);
                    break;
                }
            }
            ++i;
            ++j;
        }
    }
    return PositionLists::build(std::max(a.word_length(), b.word_length()), std::move(out));
}

std::vector<ListedRepeat> as_listed(const std::vector<MaxRepeat>& reps, std::uint8_t flags) {
    std::vector<ListedRepeat> out;
    out.reserve(reps.size());
    for (const MaxRepeat& r : reps) out.push_back({r, 0, flags});
    return out;
}

std::vector<ListedRepeat> as_listed(const std::vector<AnnotatedRepeat>& reps, std::uint8_t flags) {
    std::vector<ListedRepeat> out;
    out.reserve(reps.size());
    for (const AnnotatedRepeat& r : reps) out.push_back({r.rep, r.q, flags});
    return out;
}

}  // namespace subrep
