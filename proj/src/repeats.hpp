#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lce_index.hpp"
#include "rational.hpp"
#include "repeat_types.hpp"
#include "runs.hpp"
#include "word.hpp"

namespace subrep {

inline constexpr std::uint8_t kFlagReprincipal = 1;
inline constexpr std::uint8_t kFlagAlphaPeriodic = 2;

// Repeat entry of a start-position list.
struct ListedRepeat {
    MaxRepeat rep;
    std::uint32_t q = 0;
    std::uint8_t flags = 0;
};

// The set GR: all maximal alpha-gapped repeats, sorted by (beg, p). Anchor
// sampling: for each period p the minimum alpha-gapped copy length is
// L = ceil(p*num/den), and any repeat with c >= L covers a multiple of L, so
// extending around every matching multiple finds them all.
std::vector<MaxRepeat> compute_gapped_repeats(const Word& w, const LceIndex& idx, const Delta& delta);

// Maximal alpha-gapped repeats generated by r: beg/end pinned to the run,
// period a multiple of p(r). q is p(r).
std::vector<AnnotatedRepeat> generated_repeats(const Run& r, const Delta& delta);

// The set PR: one principal repeat (beg(r), p(r), |r|-p(r)) per run.
std::vector<ListedRepeat> reprincipal_repeats(const std::vector<Run>& runs);

// Repeats bucketed by start position, periods strictly increasing inside a
// bucket. Built with a two-pass bucket sort; duplicate (beg, p) keys are a
// hard error.
class PositionLists {
public:
    PositionLists() = default;

    static PositionLists build(std::uint32_t n, std::vector<ListedRepeat> entries);

    std::uint32_t word_length() const { return n_; }
    std::size_t size() const { return entries_.size(); }
    std::span<const ListedRepeat> all() const { return entries_; }
    std::span<const ListedRepeat> bucket(std::uint32_t t) const {
        return std::span<const ListedRepeat>(entries_.data() + bucket_begin_[t],
                                             bucket_begin_[t + 1] - bucket_begin_[t]);
    }

private:
    std::uint32_t n_ = 0;
    std::vector<ListedRepeat> entries_;        // sorted by (beg, p)
    std::vector<std::uint32_t> bucket_begin_;  // size n_ + 2
};

enum class MergeOp { difference, intersection, set_union, mark };

// Keyed on (beg, p), linear in the total size. mark returns a with mark_flag
// set on every entry that also occurs in b (adopting b's q when a has none).
PositionLists merge_by_key(const PositionLists& a, const PositionLists& b, MergeOp op,
                           std::uint8_t mark_flag = kFlagAlphaPeriodic);

std::vector<ListedRepeat> as_listed(const std::vector<MaxRepeat>& reps, std::uint8_t flags = 0);
std::vector<ListedRepeat> as_listed(const std::vector<AnnotatedRepeat>& reps, std::uint8_t flags = 0);

}  // namespace subrep
