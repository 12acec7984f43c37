#include "pair_repeats.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace subrep {

namespace {

using i128 = __int128;

std::int64_t floor_div(i128 a, i128 b) {  // b > 0
    i128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

}  // namespace

PairContext make_pair_context(const Run& a, const Run& b) {
    if (a.p != b.p || a.group < 0 || a.group != b.group)
        throw PairMismatchError("runs do not share cyclic roots");
    if (a.beg == b.beg) throw PairMismatchError("pair needs two distinct runs");
    PairContext ctx;
    ctx.r1 = a.beg < b.beg ? a : b;
    ctx.r2 = a.beg < b.beg ? b : a;
    return ctx;
}

MaxRepeat PsiSegment::member(std::uint32_t j) const {
    const std::int64_t pj = p_first + static_cast<std::int64_t>(j - 1) * p;
    const std::int64_t bj = j <= k1 ? beg_first - static_cast<std::int64_t>(j - 1) * p : beg_r1;
    const std::int64_t ej = j <= k1 + k2 ? end_first + static_cast<std::int64_t>(j - 1) * p : end_r2;
    const std::int64_t cj = ej - bj + 1 - pj;
    return {static_cast<std::uint32_t>(bj), static_cast<std::uint32_t>(pj),
            static_cast<std::uint32_t>(cj)};
}

namespace {

// Validates the two progression slots whose maximality the runs cannot
// force. Everything else in Psi is maximal by construction.
void check_seams(PsiSegment& s, const PairContext& ctx, const Word& w) {
    const std::uint32_t total = s.total();
    const std::uint32_t begin_slot = s.k1 + 1;
    if (begin_slot <= total) {
        const MaxRepeat m = s.member(begin_slot);
        if (m.beg + m.p == ctx.r2.beg && ctx.r1.beg > 1 &&
            w.at(ctx.r1.beg - 1) == w.at(ctx.r2.beg - 1))
            s.begin_seam_invalid = true;
    }
    const std::uint32_t end_slot = s.k1 + s.k2 + 1;
    if (s.k3 > 0 && end_slot <= total) {
        const MaxRepeat m = s.member(end_slot);
        if (m.c == ctx.r1.len() && ctx.r2.end < w.size() &&
            w.at(ctx.r1.end + 1) == w.at(ctx.r2.end + 1))
            s.end_seam_invalid = true;
    }
}

}  // namespace

PsiSegment compute_psi(const PairContext& ctx, const Word& w, PsiBranchCounters* counters) {
    const Run &r1 = ctx.r1, &r2 = ctx.r2;
    const std::int64_t p = r1.p;
    const std::int64_t beg1 = r1.beg, end1 = r1.end, beg2 = r2.beg, end2 = r2.end;
    const std::int64_t len1 = r1.len(), len2 = r2.len();

    PsiSegment s;
    s.p = p;
    s.beg_r1 = beg1;
    s.end_r2 = end2;

    // start of the leftmost non-prefix cyclic root of r1 equal to the prefix
    // root of r2
    const std::int64_t fp = r1.a > r2.a ? beg1 + r1.a - r2.a : beg1 + r1.a - r2.a + p;

    if (end1 - fp + 1 >= 3 * p) {
        // first-type members exist; member 1 is the rightmost of them
        if (counters) ++counters->main;
        const std::int64_t f1 = fp + ((end1 - 3 * p + 1 - fp) / p) * p;
        s.k1 = static_cast<std::uint32_t>((f1 - fp) / p + 1);
        s.p_first = beg2 - f1;
        s.beg_first = f1;
        s.end_first = end1 + s.p_first;
        const std::int64_t khat = (end2 - s.end_first - 1) / p + 1;
        s.k2 = static_cast<std::uint32_t>(khat - s.k1);
        const std::int64_t p_khat = s.p_first + (khat - 1) * p;
        const std::int64_t c_next = end2 - beg1 + 1 - p_khat - p;
        s.k3 = c_next >= 3 * p
                   ? static_cast<std::uint32_t>((end2 - beg1 + 1 - p_khat) / p - 3)
                   : 0;
        check_seams(s, ctx, w);
        return s;
    }

    // no first-type members: everything starts at beg(r1)
    const std::int64_t p1 = beg2 - fp + p;
    const std::int64_t c1 = std::min(len1, len2 + fp - beg1 - p);
    s.p_first = p1;
    s.beg_first = beg1;
    if (c1 < 3 * p) {
        if (counters) ++counters->empty_short;
        s.end_first = end2;
        return s;  // Psi is empty
    }
    if (len1 < len2 + fp - beg1 - p) {
        // member 1 is of second type
        if (counters) ++counters->second_anchor;
        s.end_first = end1 + p1;
        s.k2 = static_cast<std::uint32_t>((end2 - s.end_first - 1) / p + 1);
        const std::int64_t p_last = p1 + (static_cast<std::int64_t>(s.k2) - 1) * p;
        const std::int64_t c_next = end2 - beg1 + 1 - p_last - p;
        s.k3 = c_next >= 3 * p ? 1 : 0;
    } else {
        // member 1 is of third type and the only member
        if (counters) ++counters->third_anchor;
        s.end_first = end2;
        s.k3 = 1;
    }
    check_seams(s, ctx, w);
    return s;
}

AlphaSlice alpha_gapped_slice(const PsiSegment& psi, const Delta& delta, PsiBranchCounters* counters) {
    AlphaSlice slice;
    const std::uint32_t total = psi.total();
    if (total == 0) return slice;
    const std::uint64_t num = delta.num(), den = delta.den();
    const auto ok = [&](std::uint32_t j) {
        const MaxRepeat mm = psi.member(j);
        return delta.alpha_gapped(mm.p, mm.c);
    };
    const std::uint32_t khat = psi.k1 + psi.k2;

    // m is shared by the gapped and the overlapped anchor case: the ratio
    // p/c increases with the index beyond k1, so the last alpha-gapped
    // member is pinned down by the same guard chain either way.
    const auto find_m = [&]() -> std::optional<std::uint32_t> {
        if (ok(total)) return total;
        if (psi.k3 > 0 && ok(khat + 1)) {
            const MaxRepeat a = psi.member(khat + 1);
            return khat + 1 +
                   static_cast<std::uint32_t>(floor_div(
                       (i128)a.c * den - (i128)a.p * num, (i128)psi.p * (den + num)));
        }
        if (psi.k3 > 0 && khat >= 1 && ok(khat)) return khat;
        if (psi.k2 > 0 && ok(psi.k1 + 1)) {
            const MaxRepeat a = psi.member(psi.k1 + 1);  // c stays |r1| across second type
            return psi.k1 + 1 +
                   static_cast<std::uint32_t>(
                       floor_div((i128)a.c * den - (i128)a.p * num, (i128)psi.p * num));
        }
        if (psi.k1 > 0 && ok(psi.k1)) return psi.k1;
        return std::nullopt;
    };

    const MaxRepeat first = psi.member(1);
    if (!first.gapped()) {
        // Overlapped anchor: all first-type members are overlapped and the
        // members from k1+2 on are gapped, so the gapped tail starts at k1+1
        // or k1+2.
        if (counters) ++counters->overlapped_anchor;
        std::uint32_t l0 = psi.k1 + 1;
        if (l0 <= total && !psi.member(l0).gapped()) ++l0;
        if (l0 > total || !ok(l0)) return slice;
        const auto m = find_m();
        if (!m || *m < l0) throw InternalInvariantError("alpha slice lost its gapped tail");
        slice = {l0, *m, false};
        return slice;
    }

    // Gapped anchor: every member is gapped; ratios fall over 1..k1 and rise
    // afterwards, so the alpha-gapped members form one contiguous block.
    std::uint32_t l = 0;
    if (psi.k1 > 0 && ok(1)) {
        l = 1;
    } else if (psi.k1 > 0 && ok(psi.k1)) {
        const i128 over = (i128)first.p * num - (i128)first.c * den;  // > 0: member 1 failed
        l = 1 + static_cast<std::uint32_t>(ceil_div(over, (i128)psi.p * (den - num)));
    } else if (total > psi.k1 && ok(psi.k1 + 1)) {
        l = psi.k1 + 1;
    } else {
        return slice;
    }
    const auto m = find_m();
    if (!m || *m < l) throw InternalInvariantError("alpha slice guards disagree");
    slice = {l, *m, false};
    return slice;
}

namespace {

// enumerate: the full alpha-gapped segment; nondominating: only indices
// above k1+k2+1; overlapped: the overlapped prefix, no alpha filter.
enum class PsiOp { enumerate, nondominating, overlapped };

void emit_psi(const PairContext& ctx, const Word& w, const Delta* delta, PsiOp op,
              Provenance prov, std::uint32_t map_n, PsiBranchCounters* counters,
              std::vector<AnnotatedRepeat>& out) {
    const PsiSegment psi = compute_psi(ctx, w, counters);
    const std::uint32_t total = psi.total();
    if (total == 0) return;
    const auto push = [&](std::uint32_t j) {
        if (!psi.valid(j)) return;
        MaxRepeat rep = psi.member(j);
        if (map_n > 0) rep = reverse_map(rep, map_n);
        out.push_back({rep, static_cast<std::uint32_t>(psi.p), prov, psi.type_of(j)});
    };
    if (op == PsiOp::overlapped) {
        for (std::uint32_t j = 1; j <= std::min(psi.k1 + 1, total); ++j)
            if (!psi.member(j).gapped()) push(j);
        return;
    }
    const AlphaSlice slice = alpha_gapped_slice(psi, *delta, counters);
    if (slice.empty) return;
    const std::uint32_t from =
        op == PsiOp::nondominating ? std::max(slice.l, psi.dominating_index() + 1) : slice.l;
    for (std::uint32_t j = from; j <= slice.m; ++j) push(j);
}

PairContext mirrored_context(const PairContext& ctx, const Word& reversed_word) {
    const std::uint32_t n = reversed_word.size();
    const auto mirror_run = [&](const Run& r) {
        Run m;
        m.beg = n - r.end + 1;
        m.end = n - r.beg + 1;
        m.p = r.p;
        m.a = lyndon_offset(reversed_word, m.beg, m.p);
        m.group = r.group;
        return m;
    };
    PairContext out;
    out.r1 = mirror_run(ctx.r2);
    out.r2 = mirror_run(ctx.r1);
    return out;
}

std::vector<AnnotatedRepeat> run_psi_op(const Word& w, const PairContext& ctx, const Delta* delta,
                                        PsiOp op) {
    std::vector<AnnotatedRepeat> out;
    if (ctx.left()) {
        emit_psi(ctx, w, delta, op, Provenance::left_pair, 0, nullptr, out);
    } else {
        const Word rev = w.reversed();
        emit_psi(mirrored_context(ctx, rev), rev, delta, op, Provenance::right_pair, w.size(),
                 nullptr, out);
    }
    return out;
}

// Walks every alpha-close left pair of the analysis in LRSR order, removing
// each processed run from its doubly linked PRSR so a run is visited O(alpha)
// times in total. strict_shorter skips pairs of equal length (used on the
// reversed word, where those pairs belong to the forward orientation).
void for_each_alpha_close_pair(const WordAnalysis& an, const Delta& delta, bool strict_shorter,
                               PairScanStats* stats,
                               const std::function<void(const PairContext&)>& fn) {
    const auto& runs = an.runs;
    std::vector<std::uint32_t> slot(runs.size(), 0);
    for (std::size_t g = 0; g < an.groups.prsr.size(); ++g) {
        const auto& prsr = an.groups.prsr[g];
        const std::uint32_t sz = static_cast<std::uint32_t>(prsr.size());
        if (sz < 2) continue;
        std::vector<std::uint32_t> nxt(sz + 1), prv(sz + 1);
        for (std::uint32_t i = 0; i <= sz; ++i) {
            nxt[i] = i + 1;
            prv[i] = i == 0 ? sz : i - 1;  // slot sz is the list head/tail sentinel
        }
        for (std::uint32_t i = 0; i < sz; ++i) slot[prsr[i]] = i;
        for (const std::uint32_t run_idx : an.groups.lrsr[g]) {
            const Run& r1 = runs[run_idx];
            const std::uint32_t i = slot[run_idx];
            std::uint32_t close = 0;
            for (std::uint32_t j = nxt[i]; j < sz; j = nxt[j]) {
                const Run& r2 = runs[prsr[j]];
                if (!delta.alpha_close(r2.beg - r1.beg, r1.len())) break;
                ++close;
                if (!(strict_shorter && r2.len() == r1.len())) {
                    PairContext ctx;
                    ctx.r1 = r1;
                    ctx.r2 = r2;
                    fn(ctx);
                }
            }
            if (stats) stats->max_alpha_close = std::max(stats->max_alpha_close, close);
            // unlink i
            nxt[prv[i]] = nxt[i];
            prv[nxt[i]] = prv[i];
        }
    }
}

std::vector<AnnotatedRepeat> scan_pairs(const WordAnalysis& fwd, const WordAnalysis& rev,
                                        const Delta& delta, Orientation orientation,
                                        bool nondominating_only, PairScanStats* stats) {
    std::vector<AnnotatedRepeat> out;
    const PsiOp op = nondominating_only ? PsiOp::nondominating : PsiOp::enumerate;
    PsiBranchCounters* counters = stats ? &stats->branches : nullptr;
    if (orientation == Orientation::left) {
        for_each_alpha_close_pair(fwd, delta, false, stats, [&](const PairContext& ctx) {
            emit_psi(ctx, fwd.word, &delta, op, Provenance::left_pair, 0, counters, out);
        });
    } else {
        for_each_alpha_close_pair(rev, delta, true, stats, [&](const PairContext& ctx) {
            emit_psi(ctx, rev.word, &delta, op, Provenance::right_pair, rev.n, counters, out);
        });
    }
    return out;
}

}  // namespace

std::vector<AnnotatedRepeat> psi_enumerate(const Word& w, const PairContext& ctx, const Delta& delta) {
    return run_psi_op(w, ctx, &delta, PsiOp::enumerate);
}

std::vector<AnnotatedRepeat> psi_nondominating(const Word& w, const PairContext& ctx,
                                               const Delta& delta) {
    return run_psi_op(w, ctx, &delta, PsiOp::nondominating);
}

std::vector<AnnotatedRepeat> psi_overlapped(const Word& w, const PairContext& ctx) {
    if (ctx.r2.beg > ctx.r1.end + 1) return {};  // the runs must overlap
    return run_psi_op(w, ctx, nullptr, PsiOp::overlapped);
}

std::vector<AnnotatedRepeat> birepresented_periodic(const WordAnalysis& fwd, const WordAnalysis& rev,
                                                    const Delta& delta, Orientation orientation,
                                                    PairScanStats* stats) {
    return scan_pairs(fwd, rev, delta, orientation, false, stats);
}

std::vector<AnnotatedRepeat> all_periodic_gapped(const WordAnalysis& fwd, const WordAnalysis& rev,
                                                 const Delta& delta, PairScanStats* stats) {
    std::vector<AnnotatedRepeat> out = scan_pairs(fwd, rev, delta, Orientation::left, false, stats);
    auto right = scan_pairs(fwd, rev, delta, Orientation::right, false, stats);
    out.insert(out.end(), right.begin(), right.end());
    for (const Run& r : fwd.runs) {
        const auto gen = generated_repeats(r, delta);
        for (const AnnotatedRepeat& g : gen)
            if (g.rep.c >= 3 * r.p) out.push_back(g);
    }
    return out;
}

std::vector<AnnotatedRepeat> overlapped_birepresented(const WordAnalysis& fwd, const WordAnalysis& rev) {
    std::vector<AnnotatedRepeat> out;
    const auto pass = [&](const WordAnalysis& an, bool mapped) {
        for (const auto& prsr : an.groups.prsr) {
            for (std::size_t i = 0; i + 1 < prsr.size(); ++i) {
                const Run& r1 = an.runs[prsr[i]];
                const Run& r2 = an.runs[prsr[i + 1]];
                if (r2.beg > r1.end + 1) continue;  // disjoint, represents nothing overlapped
                const bool left_pair = r1.len() <= r2.len();
                if (!mapped && !left_pair) continue;                  // right pairs go through the mirror
                if (mapped && (!left_pair || r1.len() == r2.len())) continue;
                PairContext ctx;
                ctx.r1 = r1;
                ctx.r2 = r2;
                emit_psi(ctx, an.word, nullptr, PsiOp::overlapped,
                         mapped ? Provenance::right_pair : Provenance::left_pair,
                         mapped ? an.n : 0, nullptr, out);
            }
        }
    };
    pass(fwd, false);
    pass(rev, true);
    return out;
}

ReprincipalSplit alpha_periodic_reprincipal(const PositionLists& pr,
                                            const std::vector<AnnotatedRepeat>& overlapped_birep,
                                            const Delta& delta) {
    std::vector<ListedRepeat> alpha_periodic;
    for (const AnnotatedRepeat& a : overlapped_birep)
        if (delta.alpha_periodic(a.q, a.rep.p)) alpha_periodic.push_back({a.rep, a.q, 0});
    const PositionLists candidates = PositionLists::build(pr.word_length(), std::move(alpha_periodic));
    ReprincipalSplit split;
    split.apr = merge_by_key(pr, candidates, MergeOp::intersection);
    split.npr = merge_by_key(pr, split.apr, MergeOp::difference);
    return split;
}

std::vector<AnnotatedRepeat> compute_banr(const WordAnalysis& fwd, const WordAnalysis& rev,
                                          const Delta& delta, PairScanStats* stats) {
    std::vector<AnnotatedRepeat> out = scan_pairs(fwd, rev, delta, Orientation::left, true, stats);
    auto right = scan_pairs(fwd, rev, delta, Orientation::right, true, stats);
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

}  // namespace subrep
