#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"
#include "repeat_types.hpp"
#include "word.hpp"

namespace subrep::oracle {

// Brute-force reference implementations. These are the ground truth for every
// equivalence test, so they must stay independent of the fast path: no
// LceIndex, no runs/repeats/pair machinery, only Word and the plain structs.

inline constexpr std::size_t kDefaultCap = 2048;

void check_cap(const Word& w, std::size_t cap);

// All maximal delta-subrepetitions by scanning every factor: O(n^2) with a
// per-suffix border table. Sorted by (beg, p).
std::vector<Subrepetition> brute_subrepetitions(const Word& w, const Delta& delta,
                                                std::size_t cap = kDefaultCap);

// All maximal repeats with period in [p_min, p_max]: maximal intervals of
// positions x with w[x] = w[x+p]. Sorted by (beg, p).
std::vector<MaxRepeat> brute_max_repeats(const Word& w, std::uint32_t p_min, std::uint32_t p_max,
                                         std::size_t cap = kDefaultCap);

// All maximal alpha-gapped repeats (c < p and p <= alpha*c). Sorted by (beg, p).
std::vector<MaxRepeat> brute_gapped_repeats(const Word& w, const Delta& delta,
                                            std::size_t cap = kDefaultCap);

// All maximal repetitions with minimal periods (a and group left unset).
// Sorted by (beg, end).
std::vector<Run> brute_runs(const Word& w, std::size_t cap = kDefaultCap);

// True iff the minimal period of fact(sigma) equals p(sigma).
bool brute_principal(const Word& w, const MaxRepeat& sigma);

enum class PairMode { periodic, overlapped, nondominating_third };

// Periodic repeats represented by the run pair (r1, r2): maximal repeats
// whose copies lie in r1 and r2 respectively, are repetitions with minimal
// period p(r1), and have length >= 3*p(r1). Type tags follow the left or
// right orientation of the pair. Sorted by (beg, p).
std::vector<AnnotatedRepeat> brute_pair_repeats(const Word& w, const Run& r1, const Run& r2,
                                                PairMode mode, std::size_t cap = kDefaultCap);

}  // namespace subrep::oracle
