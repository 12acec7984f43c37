#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace subrep::oracle {

namespace {

// Minimal period of w[beg..end] without touching word.cpp's helper: the
// oracle keeps its own copy on purpose.
std::uint32_t naive_min_period(const Word& w, std::uint32_t beg, std::uint32_t end) {
    const std::uint32_t len = end - beg + 1;
    std::vector<std::uint32_t> border(len + 1, 0);
    for (std::uint32_t i = 2; i <= len; ++i) {
        std::uint32_t b = border[i - 1];
        while (b > 0 && w.at(beg + i - 1) != w.at(beg + b)) b = border[b];
        if (w.at(beg + i - 1) == w.at(beg + b)) ++b;
        border[i] = b;
    }
    return len - border[len];
}

}  // namespace

void check_cap(const Word& w, std::size_t cap) {
    if (w.size() > cap)
        throw OracleSizeError("word of length " + std::to_string(w.size()) +
                              " exceeds oracle cap " + std::to_string(cap));
}

std::vector<Subrepetition> brute_subrepetitions(const Word& w, const Delta& delta, std::size_t cap) {
    check_cap(w, cap);
    const std::uint32_t n = w.size();
    std::vector<Subrepetition> out;
    if (n < 2) return out;
    std::vector<std::uint32_t> border(n + 1);
    for (std::uint32_t i = 1; i <= n; ++i) {
        // border table of the suffix w[i..n]; min period of w[i..j] follows.
        border[1] = 0;
        const std::uint32_t m = n - i + 1;
        for (std::uint32_t k = 2; k <= m; ++k) {
            std::uint32_t b = border[k - 1];
            while (b > 0 && w.at(i + k - 1) != w.at(i + b)) b = border[b];
            if (w.at(i + k - 1) == w.at(i + b)) ++b;
            border[k] = b;
        }
        for (std::uint32_t j = i + 1; j <= n; ++j) {
            const std::uint32_t len = j - i + 1;
            const std::uint32_t p = len - border[len];
            if (len >= 2 * p) continue;                       // exponent >= 2
            if (!delta.meets_exponent(len, p)) continue;      // exponent >= 1 + delta
            if (i > 1 && w.at(i - 1) == w.at(i + p - 1)) continue;
            if (j < n && w.at(j - p + 1) == w.at(j + 1)) continue;
            std::uint64_t e_num = len, e_den = p;
            const std::uint64_t g = std::gcd(e_num, e_den);
            out.push_back({i, j, p, e_num / g, e_den / g});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Subrepetition& a, const Subrepetition& b) {
                  return std::make_pair(a.beg, a.p) < std::make_pair(b.beg, b.p);
              });
    return out;
}

std::vector<MaxRepeat> brute_max_repeats(const Word& w, std::uint32_t p_min, std::uint32_t p_max,
                                         std::size_t cap) {
    check_cap(w, cap);
    const std::uint32_t n = w.size();
    std::vector<MaxRepeat> out;
    if (n < 2) return out;
    p_max = std::min(p_max, n - 1);
    for (std::uint32_t p = std::max(1u, p_min); p <= p_max; ++p) {
        std::uint32_t x = 1;
        while (x + p <= n) {
            if (w.at(x) != w.at(x + p)) {
                ++x;
                continue;
            }
            std::uint32_t y = x;
            while (y + p < n && w.at(y + 1) == w.at(y + 1 + p)) ++y;
            out.push_back({x, p, y - x + 1});
            x = y + 2;  // position y+1 mismatches (or is past the end)
        }
    }
    std::sort(out.begin(), out.end(), key_less);
    return out;
}

std::vector<MaxRepeat> brute_gapped_repeats(const Word& w, const Delta& delta, std::size_t cap) {
    auto all = brute_max_repeats(w, 1, w.size(), cap);
    std::vector<MaxRepeat> out;
    for (const MaxRepeat& r : all)
        if (r.gapped() && delta.alpha_gapped(r.p, r.c)) out.push_back(r);
    return out;
}

std::vector<Run> brute_runs(const Word& w, std::size_t cap) {
    auto all = brute_max_repeats(w, 1, w.size(), cap);
    std::vector<Run> out;
    for (const MaxRepeat& r : all) {
        if (r.c < r.p) continue;  // needs exponent >= 2
        const std::uint32_t end = r.end();
        if (naive_min_period(w, r.beg, end) != r.p) continue;
        out.push_back({r.beg, end, r.p, 0, -1});
    }
    std::sort(out.begin(), out.end(),
              [](const Run& a, const Run& b) { return std::make_pair(a.beg, a.end) < std::make_pair(b.beg, b.end); });
    return out;
}

bool brute_principal(const Word& w, const MaxRepeat& sigma) {
    return naive_min_period(w, sigma.beg, sigma.end()) == sigma.p;
}

std::vector<AnnotatedRepeat> brute_pair_repeats(const Word& w, const Run& r1, const Run& r2,
                                                PairMode mode, std::size_t cap) {
    const bool left = r1.len() <= r2.len();
    const std::uint32_t q = r1.p;
    auto all = brute_max_repeats(w, 1, w.size(), cap);
    std::vector<AnnotatedRepeat> out;
    for (const MaxRepeat& s : all) {
        if (s.c < 3 * q) continue;
        // copies contained in r1 / r2 respectively
        const std::uint32_t lb = s.beg, le = s.beg + s.c - 1;
        const std::uint32_t rb = s.beg + s.p, re = s.end();
        if (lb < r1.beg || le > r1.end) continue;
        if (rb < r2.beg || re > r2.end) continue;
        if (naive_min_period(w, lb, le) != q) continue;
        AnnotatedRepeat a;
        a.rep = s;
        a.q = q;
        a.prov = left ? Provenance::left_pair : Provenance::right_pair;
        // Type classification from the beg/end equalities of the three cases.
        if (lb == r1.beg && re == r2.end)
            a.type = PsiType::third_dominating;  // dominating flag resolved below
        else if (left)
            a.type = (lb == r1.beg) ? PsiType::second : PsiType::first;
        else
            a.type = (re == r2.end) ? PsiType::second : PsiType::first;
        out.push_back(a);
    }
    // The dominating repeat of third type is the one with the smallest period.
    std::uint64_t min_third_p = UINT64_MAX;
    for (const auto& a : out)
        if (a.type == PsiType::third_dominating) min_third_p = std::min<std::uint64_t>(min_third_p, a.rep.p);
    for (auto& a : out)
        if (a.type == PsiType::third_dominating && a.rep.p != min_third_p)
            a.type = PsiType::third_nondominating;

    std::vector<AnnotatedRepeat> filtered;
    for (const auto& a : out) {
        switch (mode) {
            case PairMode::periodic: filtered.push_back(a); break;
            case PairMode::overlapped:
                if (!a.rep.gapped()) filtered.push_back(a);
                break;
            case PairMode::nondominating_third:
                if (a.type == PsiType::third_nondominating) filtered.push_back(a);
                break;
        }
    }
    std::sort(filtered.begin(), filtered.end(),
              [](const AnnotatedRepeat& a, const AnnotatedRepeat& b) { return key_less(a.rep, b.rep); });
    return filtered;
}

}  // namespace subrep::oracle
