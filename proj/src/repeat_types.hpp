#pragma once

#include <cstdint>
#include <tuple>

namespace subrep {

// Maximal repetition (run): w[beg..end] with minimal period p and exponent
// >= 2, unextendable in either direction. a is the offset of the leftmost
// Lyndon root occurrence; group identifies its same-cyclic-roots class.
struct Run {
    std::uint32_t beg = 0;
    std::uint32_t end = 0;
    std::uint32_t p = 0;
    std::uint32_t a = 0;
    std::int32_t group = -1;

    std::uint32_t len() const { return end - beg + 1; }
    bool operator==(const Run& o) const { return beg == o.beg && end == o.end && p == o.p; }
};

// Maximal repeat: two equal copies of length c at distance p, identified by
// (beg, p). Gapped iff c < p.
struct MaxRepeat {
    std::uint32_t beg = 0;
    std::uint32_t p = 0;
    std::uint32_t c = 0;

    std::uint32_t end() const { return beg + p + c - 1; }
    bool gapped() const { return c < p; }
    auto key() const { return std::make_pair(beg, p); }
    bool operator==(const MaxRepeat& o) const { return beg == o.beg && p == o.p && c == o.c; }
};

inline bool key_less(const MaxRepeat& a, const MaxRepeat& b) { return a.key() < b.key(); }

enum class Provenance : std::uint8_t { unknown, generated, left_pair, right_pair };
enum class PsiType : std::uint8_t { none, first, second, third_dominating, third_nondominating };

struct AnnotatedRepeat {
    MaxRepeat rep;
    std::uint32_t q = 0;  // minimal period of the copies, 0 when not known
    Provenance prov = Provenance::unknown;
    PsiType type = PsiType::none;
};

// Maximal delta-subrepetition: factor with exponent in [1+delta, 2), carried
// with the exact exponent (e_num / e_den reduced).
struct Subrepetition {
    std::uint32_t beg = 0;
    std::uint32_t end = 0;
    std::uint32_t p = 0;
    std::uint64_t e_num = 0;
    std::uint64_t e_den = 1;

    auto triple() const { return std::make_tuple(beg, end, p); }
    bool operator==(const Subrepetition& o) const { return triple() == o.triple(); }
};

}  // namespace subrep
