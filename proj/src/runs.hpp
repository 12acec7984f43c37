#pragma once

#include <cstdint>
#include <vector>

#include "lce_index.hpp"
#include "repeat_types.hpp"
#include "word.hpp"

namespace subrep {

// Runs grouped by their cyclic roots. Indices refer to the runs vector the
// groups were built from.
struct RunGroups {
    // per group, run indices by strictly increasing beg
    std::vector<std::vector<std::uint32_t>> prsr;
    // the same runs by (length, beg) nondecreasing
    std::vector<std::vector<std::uint32_t>> lrsr;
};

// All maximal repetitions with their minimal periods, sorted by (beg, end).
// a and group are left unset; fill them with lyndon_offset / group_runs.
std::vector<Run> compute_runs(const Word& w, const LceIndex& idx);

// Rotation index of the lexicographically least rotation of w[beg..beg+p-1]
// (Booth's algorithm, O(p)).
std::uint32_t lyndon_offset(const Word& w, std::uint32_t beg, std::uint32_t p);
inline std::uint32_t lyndon_offset(const Run& r, const Word& w) { return lyndon_offset(w, r.beg, r.p); }

// Partitions runs into same-cyclic-roots classes and assigns group ids.
// Requires each run to carry p and a.
RunGroups group_runs(std::vector<Run>& runs, const LceIndex& idx);

// Runs + Lyndon offsets + groups for one word; the unit the pair machinery
// works on. Owns a copy of the word (the reversed word for a mirrored
// analysis) so pair enumeration can validate repeats against symbols.
struct WordAnalysis {
    Word word;
    std::vector<Run> runs;
    RunGroups groups;
    std::uint32_t n = 0;
};

WordAnalysis analyze(const Word& w, const LceIndex& idx);

// Derives the analysis of the reversed word from the forward one: runs mirror
// exactly and the group partition is preserved, only the Lyndon offsets are
// recomputed on the reversed roots. No second index is needed.
WordAnalysis mirror_analysis(const WordAnalysis& fwd);

}  // namespace subrep
