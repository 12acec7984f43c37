#include "word.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace subrep {

namespace {

constexpr std::uint32_t kMaxLength = (1u << 31) - 2;

std::uint32_t alphabet_bound(std::size_t n) {
    return std::max<std::uint32_t>(255, static_cast<std::uint32_t>(std::min<std::size_t>(n, kMaxLength)));
}

}  // namespace

Word::Word(std::vector<std::uint32_t> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() > kMaxLength) throw ParseError("word longer than 2^31-2 symbols");
    const std::uint32_t bound = alphabet_bound(symbols_.size());
    for (std::uint32_t s : symbols_) {
        if (s > bound)
            throw AlphabetError("symbol " + std::to_string(s) + " exceeds alphabet bound " +
                                std::to_string(bound));
        max_symbol_ = std::max(max_symbol_, s);
    }
}

Word Word::from_bytes(std::string_view raw) {
    std::vector<std::uint32_t> syms;
    syms.reserve(raw.size());
    for (unsigned char ch : raw) syms.push_back(ch);
    return Word(std::move(syms));
}

Word Word::from_int_text(std::string_view text) {
    std::vector<std::uint32_t> syms;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::uint64_t v = 0;
        std::size_t digits = 0;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            const char ch = text[i];
            if (ch < '0' || ch > '9' || digits >= 10)
                throw ParseError("bad integer token in word input");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            ++digits;
            ++i;
        }
        if (v > kMaxLength) throw AlphabetError("symbol " + std::to_string(v) + " exceeds alphabet bound");
        syms.push_back(static_cast<std::uint32_t>(v));
    }
    return Word(std::move(syms));
}

Word Word::reversed() const {
    std::vector<std::uint32_t> syms(symbols_.rbegin(), symbols_.rend());
    return Word(std::move(syms));
}

Word generate(GeneratorKind kind, std::uint32_t n, std::uint32_t sigma, std::uint64_t seed) {
    std::vector<std::uint32_t> syms;
    syms.reserve(n);
    switch (kind) {
        case GeneratorKind::fibonacci: {
            // a -> ab, b -> a starting from "a"; concatenation form S(k+1) = S(k) S(k-1).
            std::vector<std::uint32_t> prev = {0};     // S1 = a
            std::vector<std::uint32_t> cur = {0, 1};   // S2 = ab
            while (cur.size() < n) {
                std::vector<std::uint32_t> next = cur;
                next.insert(next.end(), prev.begin(), prev.end());
                prev = std::move(cur);
                cur = std::move(next);
            }
            syms.assign(cur.begin(), cur.begin() + n);
            break;
        }
        case GeneratorKind::thue_morse: {
            for (std::uint32_t i = 0; i < n; ++i)
                syms.push_back(static_cast<std::uint32_t>(__builtin_popcount(i) & 1));
            break;
        }
        case GeneratorKind::random_uniform: {
            if (sigma == 0) throw ParseError("random generator needs sigma >= 1");
            // mt19937_64 output is pinned by the standard, so this is
            // reproducible across platforms.
            std::mt19937_64 rng(seed);
            for (std::uint32_t i = 0; i < n; ++i)
                syms.push_back(static_cast<std::uint32_t>(rng() % sigma));
            break;
        }
    }
    return Word(std::move(syms));
}

std::uint32_t min_period(const Word& w, std::uint32_t beg, std::uint32_t end) {
    if (beg > end || beg < 1 || end > w.size()) throw EmptyFactorError("min_period of an empty or invalid factor");
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

}  // namespace subrep
