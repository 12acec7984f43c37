#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"
#include "repeat_types.hpp"
#include "repeats.hpp"
#include "runs.hpp"
#include "word.hpp"

namespace subrep {

// A pair of distinct runs with the same cyclic roots, r1 before r2. The pair
// is left when |r1| <= |r2|, right otherwise.
struct PairContext {
    Run r1;
    Run r2;

    bool left() const { return r1.len() <= r2.len(); }
};

// Throws PairMismatchError unless the runs share a group and beg(a) < beg(b).
PairContext make_pair_context(const Run& a, const Run& b);

// Closed form of the repeat sequence Psi of a left pair: member j has period
// p_first + (j-1)*p; start positions walk down the first-type progression and
// then stick to beg(r1); ends walk up until the third-type members pin to
// end(r2).
//
// Two boundary slots of the progression are repeats whose maximality is not
// forced by the maximality of the runs: the slot whose copies start exactly
// at beg(r1) and beg(r2), and the third-type slot whose copies end exactly at
// end(r1) and end(r2). There both extension symbols fall outside the runs and
// may coincide. Those slots are validated against the word and flagged; every
// other slot is maximal by construction. When the k1+k2+1 slot is invalid the
// dominating third-type repeat shifts to the next slot.
struct PsiSegment {
    std::uint32_t k1 = 0, k2 = 0, k3 = 0;
    std::int64_t p = 0;        // group period (the progression step)
    std::int64_t p_first = 0;  // period of member 1
    std::int64_t beg_first = 0, end_first = 0;
    std::int64_t beg_r1 = 0, end_r2 = 0;
    bool begin_seam_invalid = false;  // slot k1+1 extends to the left
    bool end_seam_invalid = false;    // slot k1+k2+1 extends to the right

    std::uint32_t total() const { return k1 + k2 + k3; }
    MaxRepeat member(std::uint32_t j) const;
    bool valid(std::uint32_t j) const {
        if (begin_seam_invalid && j == k1 + 1) return false;
        if (end_seam_invalid && j == k1 + k2 + 1) return false;
        return true;
    }
    std::uint32_t dominating_index() const {
        const std::uint32_t first_third = k1 + k2 + 1;
        return valid(first_third) ? first_third : first_third + 1;
    }
    PsiType type_of(std::uint32_t j) const {
        if (j <= k1) return PsiType::first;
        if (j <= k1 + k2) return PsiType::second;
        return j <= dominating_index() ? PsiType::third_dominating : PsiType::third_nondominating;
    }
};

// Branches taken while building / slicing Psi; the randomized pair tests
// assert every one of them is reachable.
struct PsiBranchCounters {
    std::uint64_t main = 0;               // first-type members exist
    std::uint64_t empty_short = 0;        // no first type, anchor shorter than 3p
    std::uint64_t second_anchor = 0;      // no first type, anchor of second type
    std::uint64_t third_anchor = 0;       // no first type, anchor of third type
    std::uint64_t overlapped_anchor = 0;  // member 1 overlapped while slicing
};

// w must be the word the pair's runs live in (ctx must be left-oriented).
PsiSegment compute_psi(const PairContext& ctx, const Word& w, PsiBranchCounters* counters = nullptr);

// Indices [l, m] of the alpha-gapped members, or empty = true.
struct AlphaSlice {
    std::uint32_t l = 1, m = 0;
    bool empty = true;
};

AlphaSlice alpha_gapped_slice(const PsiSegment& psi, const Delta& delta,
                              PsiBranchCounters* counters = nullptr);

// Mirror of a repeat into the reversed word of length n (an involution).
inline MaxRepeat reverse_map(const MaxRepeat& s, std::uint32_t n) {
    return {n - s.end() + 1, s.p, s.c};
}

// The three per-pair enumerations. Right-oriented pairs are handled by
// mirroring the pair into the reversed word, running the left machinery and
// mapping the results back; w is only touched in that case (to recompute the
// mirrored Lyndon offsets).
std::vector<AnnotatedRepeat> psi_enumerate(const Word& w, const PairContext& ctx, const Delta& delta);
std::vector<AnnotatedRepeat> psi_nondominating(const Word& w, const PairContext& ctx, const Delta& delta);
std::vector<AnnotatedRepeat> psi_overlapped(const Word& w, const PairContext& ctx);

enum class Orientation { left, right };

struct PairScanStats {
    std::uint32_t max_alpha_close = 0;  // most alpha-close successors seen for one run
    PsiBranchCounters branches;
};

// Union of psi_enumerate over all alpha-close pairs of one orientation.
// fwd/rev are the analyses of the word and its reversal.
std::vector<AnnotatedRepeat> birepresented_periodic(const WordAnalysis& fwd, const WordAnalysis& rev,
                                                    const Delta& delta, Orientation orientation,
                                                    PairScanStats* stats = nullptr);

// All maximal alpha-gapped periodic repeats: both pair orientations plus the
// generated repeats with copies of length >= 3 p(r). Every entry carries q.
std::vector<AnnotatedRepeat> all_periodic_gapped(const WordAnalysis& fwd, const WordAnalysis& rev,
                                                 const Delta& delta, PairScanStats* stats = nullptr);

// Maximal overlapped periodic repeats represented by pairs; only adjacent
// same-group runs can form them.
std::vector<AnnotatedRepeat> overlapped_birepresented(const WordAnalysis& fwd, const WordAnalysis& rev);

struct ReprincipalSplit {
    PositionLists apr;  // alpha-periodic reprincipal repeats
    PositionLists npr;  // the rest of PR
};

ReprincipalSplit alpha_periodic_reprincipal(const PositionLists& pr,
                                            const std::vector<AnnotatedRepeat>& overlapped_birep,
                                            const Delta& delta);

// BANR: alpha-gapped nondominating third-type repeats of all alpha-close
// pairs, both orientations.
std::vector<AnnotatedRepeat> compute_banr(const WordAnalysis& fwd, const WordAnalysis& rev,
                                          const Delta& delta, PairScanStats* stats = nullptr);

}  // namespace subrep
