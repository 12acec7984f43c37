#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace subrep {

// Exact rational delta in (0, 1). alpha = 1/delta = den/num is never
// materialized; every alpha comparison is an exact integer cross product.
// Intermediate products are taken in 128 bits so no input combination can
// overflow.
class Delta {
public:
    Delta(std::uint64_t num, std::uint64_t den) {
        if (num == 0 || den == 0 || num >= den)
            throw DeltaRangeError("delta must satisfy 0 < num/den < 1");
        const std::uint64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
        if (den_ > kMaxDenominator)
            throw DeltaRangeError("delta denominator exceeds 10^9 after reduction");
    }

    // Accepts "num/den" or a plain decimal such as "0.5".
    static Delta parse(std::string_view text);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    // p <= alpha * c
    bool alpha_gapped(std::uint64_t p, std::uint64_t c) const { return mul_le(p, num_, c, den_); }
    // q <= p / (3 * alpha)
    bool alpha_periodic(std::uint64_t q, std::uint64_t p) const { return mul_le(3 * q, den_, p, num_); }
    // dist <= alpha * len
    bool alpha_close(std::uint64_t dist, std::uint64_t len) const { return mul_le(dist, num_, len, den_); }
    // len / p >= 1 + delta
    bool meets_exponent(std::uint64_t len, std::uint64_t p) const {
        return mul_ge(len, den_, p, den_ + num_);
    }

    // least k >= 0 with 2^k >= alpha, i.e. num * 2^k >= den
    unsigned ceil_log2_alpha() const {
        unsigned k = 0;
        unsigned __int128 lhs = num_;
        while (lhs < den_) {
            lhs <<= 1;
            ++k;
        }
        return k;
    }

    static bool mul_le(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
        return (unsigned __int128)a * b <= (unsigned __int128)c * d;
    }
    static bool mul_ge(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
        return (unsigned __int128)a * b >= (unsigned __int128)c * d;
    }

    static constexpr std::uint64_t kMaxDenominator = 1'000'000'000ULL;

private:
    std::uint64_t num_ = 1;
    std::uint64_t den_ = 2;
};

inline Delta Delta::parse(std::string_view text) {
    auto parse_u64 = [](std::string_view s) -> std::uint64_t {
        if (s.empty() || s.size() > 18) throw ParseError("bad rational component: '" + std::string(s) + "'");
        std::uint64_t v = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw ParseError("bad rational component: '" + std::string(s) + "'");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash != std::string_view::npos)
        return Delta(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Delta(parse_u64(text), 1);  // integral: rejected by range check
    const std::string_view ip = text.substr(0, dot);
    const std::string_view fp = text.substr(dot + 1);
    if (fp.empty() || fp.size() > 9) throw ParseError("decimal delta supports at most 9 fractional digits");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    const std::uint64_t num = (ip.empty() ? 0 : parse_u64(ip)) * den + parse_u64(fp);
    return Delta(num, den);
}

}  // namespace subrep
