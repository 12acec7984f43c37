#pragma once

#include <cstdint>
#include <vector>

#include "pair_repeats.hpp"
#include "rational.hpp"
#include "repeat_types.hpp"
#include "repeats.hpp"
#include "word.hpp"

namespace subrep {

// Wall time and size counters of one find_subrepetitions call.
struct FindStats {
    double seconds_index = 0, seconds_runs = 0, seconds_repeats = 0, seconds_pairs = 0;
    double seconds_stage1 = 0, seconds_stage2 = 0, seconds_stage3 = 0;
    std::uint64_t run_count = 0;
    std::uint64_t gr_size = 0;
    std::uint64_t gr1_size = 0;
    std::uint64_t gr2_size = 0;
    std::uint64_t output_size = 0;
    std::uint32_t max_lqt = 0;         // largest staircase seen in the stage-2 sweep
    std::uint32_t max_alpha_close = 0;

    double seconds_total() const {
        return seconds_index + seconds_runs + seconds_repeats + seconds_pairs + seconds_stage1 +
               seconds_stage2 + seconds_stage3;
    }
};

// Stage 1: GR' = GR \ CR where CR are the alpha-gapped repeats generated by
// runs.
PositionLists stage1_remove_generated(const PositionLists& gr, const std::vector<Run>& runs,
                                      const Delta& delta);

// Stage 2: sweep the start positions left to right, keeping per-class
// staircases of alpha-nonperiodic repeats, and drop every gapped repeat
// covered by one of them. Entries of gr1 must carry the alpha-periodic mark;
// npr supplies the reprincipal repeats that seed the staircases.
PositionLists stage2_sweep(const PositionLists& gr1_marked, const PositionLists& npr,
                           const Delta& delta, std::uint32_t* max_lqt = nullptr);

// Stage 3: remove the birepresented alpha-gapped nondominating third-type
// repeats.
PositionLists stage3_remove_banr(const PositionLists& gr2, const PositionLists& banr);

// Final conversion: principal repeat (beg, p, c) -> subrepetition
// (beg, beg+p+c-1, p) with exponent (p+c)/p.
std::vector<Subrepetition> to_subrepetitions(const PositionLists& gr_star);

// The full detection pipeline: index, runs and groups, GR and PR, the
// three covering stages, conversion.
std::vector<Subrepetition> find_subrepetitions(const Word& w, const Delta& delta,
                                               FindStats* stats = nullptr);

}  // namespace subrep
