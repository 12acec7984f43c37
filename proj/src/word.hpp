#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace subrep {

// Position convention: every algorithm in this library addresses words with
// 1-based inclusive positions, matching the external interfaces. Word stores
// its symbols in a plain 0-based vector; at(pos) does the shift. This is the
// single place where the convention is defined.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint32_t> symbols);

    static Word from_bytes(std::string_view raw);
    // Whitespace-separated decimal tokens.
    static Word from_int_text(std::string_view text);

    std::uint32_t size() const { return static_cast<std::uint32_t>(symbols_.size()); }
    bool empty() const { return symbols_.empty(); }
    std::uint32_t at(std::uint32_t pos) const { return symbols_[pos - 1]; }
    std::span<const std::uint32_t> symbols() const { return symbols_; }
    std::uint32_t max_symbol() const { return max_symbol_; }

    Word reversed() const;

    bool operator==(const Word&) const = default;

private:
    std::vector<std::uint32_t> symbols_;
    std::uint32_t max_symbol_ = 0;
};

enum class GeneratorKind { fibonacci, thue_morse, random_uniform };

// Deterministic for fixed arguments. fibonacci and thue_morse emit binary
// prefixes of the standard infinite words over {0, 1}.
Word generate(GeneratorKind kind, std::uint32_t n, std::uint32_t sigma = 2, std::uint64_t seed = 0);

// Smallest p >= 1 with w[i] = w[i+p] across the factor w[beg..end], via the
// border (failure function) construction: p = len - longest border.
std::uint32_t min_period(const Word& w, std::uint32_t beg, std::uint32_t end);
inline std::uint32_t min_period(const Word& w) { return min_period(w, 1, w.size()); }

}  // namespace subrep
