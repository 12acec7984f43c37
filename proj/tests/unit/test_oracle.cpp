#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracle.hpp"
#include "test_util.hpp"

using namespace subrep;
using test::Triple;

namespace {

// Second, independently coded scan: walks every factor and tries every
// period directly. Quartic, only for tiny cross-checks of the oracle itself.
std::vector<Triple> quartic_subrepetitions(const Word& w, const Delta& d) {
    std::vector<Triple> out;
    const std::uint32_t n = w.size();
    const auto is_period = [&](std::uint32_t i, std::uint32_t j, std::uint32_t p) {
        for (std::uint32_t x = i; x + p <= j; ++x)
            if (w.at(x) != w.at(x + p)) return false;
        return true;
    };
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j) {
            std::uint32_t p = 1;
            while (!is_period(i, j, p)) ++p;
            const std::uint32_t len = j - i + 1;
            if (len >= 2 * p || !d.meets_exponent(len, p)) continue;
            if (i > 1 && w.at(i - 1) == w.at(i + p - 1)) continue;
            if (j < n && w.at(j - p + 1) == w.at(j + 1)) continue;
            out.emplace_back(i, j, p);
        }
    return out;
}

}  // namespace

TEST_CASE("brute_subrepetitions on the fixtures") {
    const Delta half(1, 2);
    const auto w1 = oracle::brute_subrepetitions(test::w1(), half);
    CHECK(test::triples(w1) == std::vector<Triple>{
                                   {1, 17, 9}, {1, 19, 11}, {3, 15, 7}, {5, 13, 5}, {7, 11, 3}});
    const auto abaab = oracle::brute_subrepetitions(test::from_string("abaab"), half);
    CHECK(test::triples(abaab) == std::vector<Triple>{{1, 3, 2}, {1, 5, 3}});
    CHECK(oracle::brute_subrepetitions(test::wu(), half).empty());
}

TEST_CASE("oracle cross-check against the quartic scanner") {
    const Delta half(1, 2);
    for (const Word& w : {test::w1(), test::w5(), test::wp(), test::from_string("abaab")})
        CHECK(test::triples(oracle::brute_subrepetitions(w, half)) == quartic_subrepetitions(w, half));
    std::mt19937_64 rng(3);
    for (int it = 0; it < 40; ++it) {
        const Word w = test::random_word(rng, 2 + rng() % 24, 2 + rng() % 2);
        const Delta d(1 + rng() % 9, 10);
        REQUIRE(test::triples(oracle::brute_subrepetitions(w, d)) == quartic_subrepetitions(w, d));
    }
}

TEST_CASE("brute_max_repeats examples") {
    const auto wu3 = oracle::brute_max_repeats(test::wu(), 3, 3);
    CHECK(test::rep_triples(wu3) == std::vector<Triple>{{1, 3, 1}});
    const auto w19 = oracle::brute_max_repeats(test::w1(), 9, 9);
    CHECK(test::rep_triples(w19) == std::vector<Triple>{{1, 9, 8}});
    CHECK(oracle::brute_max_repeats(test::wu(), 4, 10).empty());
}

TEST_CASE("brute_runs finds the classic example runs") {
    const auto runs = oracle::brute_runs(test::wp());
    REQUIRE(runs.size() == 6);
    std::vector<Triple> got;
    for (const Run& r : runs) got.emplace_back(r.beg, r.end, r.p);
    CHECK(got == std::vector<Triple>{
                     {1, 5, 2}, {3, 9, 3}, {5, 6, 1}, {5, 12, 4}, {8, 10, 1}, {10, 15, 2}});

    const auto unary = oracle::brute_runs(test::wu());
    REQUIRE(unary.size() == 1);
    CHECK(unary[0].beg == 1);
    CHECK(unary[0].end == 4);
    CHECK(unary[0].p == 1);

    CHECK(oracle::brute_runs(test::from_string("abc")).empty());
}

TEST_CASE("brute_principal") {
    CHECK_FALSE(oracle::brute_principal(test::w1(), {1, 13, 6}));
    CHECK(oracle::brute_principal(test::w1(), {1, 11, 8}));
    // the principal repeat of every run is principal
    for (const Run& r : oracle::brute_runs(test::wp()))
        CHECK(oracle::brute_principal(test::wp(), {r.beg, r.p, r.len() - r.p}));
}

TEST_CASE("brute_pair_repeats on the W1 and W5 pairs") {
    const Word w1 = test::w1();
    const auto runs1 = oracle::brute_runs(w1);
    REQUIRE(runs1.size() == 2);
    const auto periodic = oracle::brute_pair_repeats(w1, runs1[0], runs1[1], oracle::PairMode::periodic);
    REQUIRE(periodic.size() == 4);
    CHECK(test::rep_triples(periodic) ==
          std::vector<Triple>{{1, 9, 8}, {1, 11, 8}, {1, 13, 6}, {3, 7, 6}});
    const auto nd =
        oracle::brute_pair_repeats(w1, runs1[0], runs1[1], oracle::PairMode::nondominating_third);
    CHECK(test::rep_triples(nd) == std::vector<Triple>{{1, 13, 6}});

    const Word w5 = test::w5();
    const auto runs5 = oracle::brute_runs(w5);
    REQUIRE(runs5.size() == 2);
    const auto periodic5 =
        oracle::brute_pair_repeats(w5, runs5[0], runs5[1], oracle::PairMode::periodic);
    CHECK(periodic5.size() == 16);
    std::vector<std::uint32_t> periods;
    for (const auto& a : periodic5) periods.push_back(a.rep.p);
    std::sort(periods.begin(), periods.end());
    for (std::uint32_t k = 0; k < 16; ++k) CHECK(periods[k] == 4 + k);
}

TEST_CASE("oracle self-consistency on random words") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 60; ++it) {
        const Word w = test::random_word(rng, 2 + rng() % 40, 2 + rng() % 3);
        const Delta d(1 + rng() % 7, 8);
        const auto all = oracle::brute_max_repeats(w, 1, w.size());

        // runs are exactly the overlapped repeats whose factor has that period
        std::vector<Triple> from_reps;
        for (const MaxRepeat& r : all) {
            if (r.c < r.p) continue;
            Word f(std::vector<std::uint32_t>(w.symbols().begin() + r.beg - 1,
                                              w.symbols().begin() + r.end()));
            if (min_period(f) == r.p) from_reps.emplace_back(r.beg, r.end(), r.p);
        }
        std::sort(from_reps.begin(), from_reps.end());
        std::vector<Triple> runs;
        for (const Run& r : oracle::brute_runs(w)) runs.emplace_back(r.beg, r.end, r.p);
        REQUIRE(from_reps == runs);

        // each subrepetition corresponds to a principal gapped repeat
        for (const Subrepetition& s : oracle::brute_subrepetitions(w, d)) {
            const std::uint32_t c = s.end - s.beg + 1 - s.p;
            const MaxRepeat rep{s.beg, s.p, c};
            REQUIRE(rep.gapped());
            REQUIRE(oracle::brute_principal(w, rep));
            REQUIRE(std::find(all.begin(), all.end(), rep) != all.end());
        }

        // distinct same-period maximal repeats never overlap by >= p
        std::map<std::uint32_t, std::vector<MaxRepeat>> by_p;
        for (const MaxRepeat& r : all) by_p[r.p].push_back(r);
        for (const auto& [p, reps] : by_p)
            for (std::size_t i = 1; i < reps.size(); ++i) {
                const auto& a = reps[i - 1];
                const auto& b = reps[i];
                if (b.beg <= a.end())
                    REQUIRE(a.end() - b.beg + 1 < p);
            }
    }
}

TEST_CASE("the size cap is enforced") {
    const Word w = generate(GeneratorKind::random_uniform, 64, 2, 1);
    CHECK_THROWS_AS(oracle::brute_subrepetitions(w, Delta(1, 2), 63), OracleSizeError);
    CHECK_THROWS_AS(oracle::brute_runs(w, 10), OracleSizeError);
    CHECK_NOTHROW(oracle::brute_runs(w, 64));
}
