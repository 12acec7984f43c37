#include "subrep_filter.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "lce_index.hpp"

namespace subrep {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint32_t floor_log2(std::uint32_t v) { return 31 - std::countl_zero(v); }

// One per-class staircase LQT_i: entries sorted by period with strictly
// increasing ends. Sizes stay O(alpha), so a sorted vector stands in for the
// balanced tree.
struct Staircase {
    struct Entry {
        std::uint32_t p;
        std::uint32_t end;
    };
    std::vector<Entry> entries;

    void drop_dead(std::uint32_t t) {
        // Ends increase along the staircase, so everything that expired sits
        // at the front.
        std::size_t k = 0;
        while (k < entries.size() && entries[k].end <= t) ++k;
        if (k > 0) entries.erase(entries.begin(), entries.begin() + k);
    }

    // Largest entry with period < p, if any.
    const Entry* predecessor(std::uint32_t p) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), p,
                                   [](const Entry& e, std::uint32_t key) { return e.p < key; });
        return it == entries.begin() ? nullptr : &*(it - 1);
    }

    void insert(std::uint32_t p, std::uint32_t end) {
        auto it = std::lower_bound(entries.begin(), entries.end(), p,
                                   [](const Entry& e, std::uint32_t key) { return e.p < key; });
        // prune successors dominated by the new entry
        auto last = it;
        while (last != entries.end() && last->end <= end) ++last;
        it = entries.erase(it, last);
        if (it != entries.begin() && (it - 1)->end >= end)
            throw InternalInvariantError("staircase violated on insert (predecessor end)");
        if (it != entries.end() && it->p <= p)
            throw InternalInvariantError("staircase violated on insert (duplicate period)");
        entries.insert(it, {p, end});
    }
};

}  // namespace

PositionLists stage1_remove_generated(const PositionLists& gr, const std::vector<Run>& runs,
                                      const Delta& delta) {
    std::vector<ListedRepeat> cr;
    for (const Run& r : runs) {
        const auto gen = generated_repeats(r, delta);
        for (const AnnotatedRepeat& g : gen) cr.push_back({g.rep, g.q, 0});
    }
    const PositionLists cr_lists = PositionLists::build(gr.word_length(), std::move(cr));
    return merge_by_key(gr, cr_lists, MergeOp::difference);
}

PositionLists stage2_sweep(const PositionLists& gr1_marked, const PositionLists& npr,
                           const Delta& delta, std::uint32_t* max_lqt) {
    const PositionLists merged = merge_by_key(gr1_marked, npr, MergeOp::set_union);
    const std::uint32_t n = merged.word_length();
    std::vector<ListedRepeat> survivors;
    if (max_lqt) *max_lqt = 0;
    if (merged.size() == 0) return merged;

    const std::uint32_t class_count = floor_log2(std::max(2u, n)) + 1;
    const std::uint32_t lep_span = delta.ceil_log2_alpha();
    std::vector<Staircase> trees(class_count);
    // lep[i] = running maximum end ever inserted into classes
    // [i - lep_span, i - 1]; monotone, updated on insert only.
    std::vector<std::uint32_t> lep(class_count + lep_span + 1, 0);
    std::uint32_t watermark = 0;

    const auto insert = [&](std::uint32_t cls, const MaxRepeat& rep) {
        trees[cls].insert(rep.p, rep.end());
        watermark = std::max(watermark, static_cast<std::uint32_t>(trees[cls].entries.size()));
        const std::uint32_t hi = std::min<std::uint32_t>(cls + lep_span, class_count + lep_span);
        for (std::uint32_t k = cls + 1; k <= hi; ++k) lep[k] = std::max(lep[k], rep.end());
    };

    for (std::uint32_t t = 1; t <= n; ++t) {
        for (auto& tree : trees) tree.drop_dead(t);
        for (const ListedRepeat& e : merged.bucket(t)) {
            const std::uint32_t cls = floor_log2(e.rep.p);
            if (e.flags & kFlagReprincipal) {
                insert(cls, e.rep);
                continue;
            }
            const std::uint32_t end = e.rep.end();
            if (end <= lep[cls]) continue;  // covered by a lower class
            if (const auto* pred = trees[cls].predecessor(e.rep.p); pred && end <= pred->end)
                continue;  // covered inside its own class
            survivors.push_back(e);
            if (!(e.flags & kFlagAlphaPeriodic)) insert(cls, e.rep);
        }
    }
    if (max_lqt) *max_lqt = watermark;
    return PositionLists::build(n, std::move(survivors));
}

PositionLists stage3_remove_banr(const PositionLists& gr2, const PositionLists& banr) {
    return merge_by_key(gr2, banr, MergeOp::difference);
}

std::vector<Subrepetition> to_subrepetitions(const PositionLists& gr_star) {
    std::vector<Subrepetition> out;
    out.reserve(gr_star.size());
    for (const ListedRepeat& e : gr_star.all()) {
        const std::uint64_t len = e.rep.p + e.rep.c;
        const std::uint64_t g = std::gcd(len, static_cast<std::uint64_t>(e.rep.p));
        out.push_back({e.rep.beg, e.rep.end(), e.rep.p, len / g, e.rep.p / g});
    }
    return out;
}

std::vector<Subrepetition> find_subrepetitions(const Word& w, const Delta& delta, FindStats* stats) {
    FindStats local;
    FindStats& st = stats ? *stats : local;
    st = FindStats{};
    const std::uint32_t n = w.size();
    if (n < 2) return {};

    auto t0 = std::chrono::steady_clock::now();
    const LceIndex idx(w);
    st.seconds_index = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const WordAnalysis fwd = analyze(w, idx);
    const WordAnalysis rev = mirror_analysis(fwd);
    st.seconds_runs = seconds_since(t0);
    st.run_count = fwd.runs.size();

    t0 = std::chrono::steady_clock::now();
    const std::vector<MaxRepeat> gr = compute_gapped_repeats(w, idx, delta);
    PositionLists gr_lists = PositionLists::build(n, as_listed(gr));
    st.seconds_repeats = seconds_since(t0);
    st.gr_size = gr.size();

    t0 = std::chrono::steady_clock::now();
    PositionLists gr1 = stage1_remove_generated(gr_lists, fwd.runs, delta);
    st.seconds_stage1 = seconds_since(t0);
    st.gr1_size = gr1.size();

    t0 = std::chrono::steady_clock::now();
    PairScanStats pair_stats;
    const std::vector<AnnotatedRepeat> periodic = all_periodic_gapped(fwd, rev, delta, &pair_stats);
    std::vector<ListedRepeat> agr;
    for (const AnnotatedRepeat& a : periodic)
        if (delta.alpha_periodic(a.q, a.rep.p)) agr.push_back({a.rep, a.q, 0});
    const PositionLists agr_lists = PositionLists::build(n, std::move(agr));
    const PositionLists gr1_marked = merge_by_key(gr1, agr_lists, MergeOp::mark, kFlagAlphaPeriodic);

    const PositionLists pr =
        PositionLists::build(n, reprincipal_repeats(fwd.runs));
    const std::vector<AnnotatedRepeat> overlapped = overlapped_birepresented(fwd, rev);
    const ReprincipalSplit split = alpha_periodic_reprincipal(pr, overlapped, delta);
    const std::vector<AnnotatedRepeat> banr = compute_banr(fwd, rev, delta, &pair_stats);
    st.seconds_pairs = seconds_since(t0);
    st.max_alpha_close = pair_stats.max_alpha_close;

    t0 = std::chrono::steady_clock::now();
    const PositionLists gr2 = stage2_sweep(gr1_marked, split.npr, delta, &st.max_lqt);
    st.seconds_stage2 = seconds_since(t0);
    st.gr2_size = gr2.size();

    t0 = std::chrono::steady_clock::now();
    const PositionLists banr_lists = PositionLists::build(n, as_listed(banr));
    const PositionLists gr_star = stage3_remove_banr(gr2, banr_lists);
    auto out = to_subrepetitions(gr_star);
    st.seconds_stage3 = seconds_since(t0);
    st.output_size = out.size();
    return out;
}

}  // namespace subrep
