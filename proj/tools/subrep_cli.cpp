// Command line front end for libsubrep. Talks to the library strictly
// through the C API in subrep/subrep.h.
//
// Exit codes: 0 success, 1 I/O error, 2 usage error, 3 verification mismatch.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <subrep/subrep.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct WordDeleter {
    void operator()(subrep_word* w) const { subrep_word_free(w); }
};
struct ResultDeleter {
    void operator()(subrep_result* r) const { subrep_result_free(r); }
};
using WordPtr = std::unique_ptr<subrep_word, WordDeleter>;
using ResultPtr = std::unique_ptr<subrep_result, ResultDeleter>;

[[noreturn]] void die(int code, const std::string& message) {
    std::cerr << "subrep: " << message << "\n";
    std::exit(code);
}

void check(subrep_status st, int exit_code = kExitUsage) {
    if (st != SUBREP_OK) die(exit_code, subrep_status_message(st));
}

struct InputOptions {
    std::string path = "-";
    bool ints = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "input file ('-' for stdin)")->capture_default_str();
    cmd->add_flag("--ints", in.ints, "parse input as whitespace-separated integers");
}

std::string slurp(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) die(kExitIo, "cannot open input file '" + path + "'");
        buf << f.rdbuf();
        if (f.bad()) die(kExitIo, "error while reading '" + path + "'");
    }
    return buf.str();
}

WordPtr read_word(const InputOptions& in) {
    std::string raw = slurp(in.path);
    subrep_word* w = nullptr;
    if (in.ints) {
        check(subrep_word_parse_ints(raw.c_str(), &w));
    } else {
        // one line of raw bytes; drop a single trailing newline
        if (!raw.empty() && raw.back() == '\n') raw.pop_back();
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        check(subrep_word_from_bytes(reinterpret_cast<const uint8_t*>(raw.data()), raw.size(), &w));
    }
    return WordPtr(w);
}

struct Rational {
    uint64_t num = 0;
    uint64_t den = 1;
};

Rational parse_delta(const std::string& text) {
    Rational r;
    const subrep_status st = subrep_delta_parse(text.c_str(), &r.num, &r.den);
    if (st != SUBREP_OK) die(kExitUsage, std::string("bad delta '") + text + "': " + subrep_status_message(st));
    return r;
}

// Plain rational, no range restriction: "3", "1.5" or "4/3".
bool parse_rational(const std::string& text, Rational& out) {
    const auto parse_u64 = [](const std::string& s, uint64_t& v) {
        if (s.empty() || s.size() > 18) return false;
        v = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') return false;
            v = v * 10 + static_cast<uint64_t>(ch - '0');
        }
        return true;
    };
    const auto slash = text.find('/');
    if (slash != std::string::npos)
        return parse_u64(text.substr(0, slash), out.num) &&
               parse_u64(text.substr(slash + 1), out.den) && out.den > 0;
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        out.den = 1;
        return parse_u64(text, out.num);
    }
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9) return false;
    uint64_t ip = 0, fp = 0;
    if (!parse_u64(text.substr(0, dot), ip) || !parse_u64(frac, fp)) return false;
    out.den = 1;
    for (size_t i = 0; i < frac.size(); ++i) out.den *= 10;
    out.num = ip * out.den + fp;
    return true;
}

// Exact decimal rendering, truncated to six fractional digits.
std::string render_ratio(uint64_t num, uint64_t den) {
    std::string s = std::to_string(num / den);
    uint64_t rem = num % den;
    s += '.';
    for (int i = 0; i < 6; ++i) {
        rem *= 10;
        s += static_cast<char>('0' + rem / den);
        rem %= den;
    }
    return s;
}

std::vector<subrep_record> records_of(const subrep_result* res) {
    std::vector<subrep_record> rows(subrep_result_count(res));
    for (size_t i = 0; i < rows.size(); ++i) check(subrep_result_get(res, i, &rows[i]), kExitIo);
    return rows;
}

void print_subreps_tsv(const std::vector<subrep_record>& rows) {
    for (const auto& r : rows)
        std::cout << r.beg << '\t' << r.end << '\t' << r.period << '\t'
                  << render_ratio(r.exp_num, r.exp_den) << '\n';
}

void print_subreps_json(const std::vector<subrep_record>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({{"beg", r.beg},
                       {"end", r.end},
                       {"period", r.period},
                       {"exponent_num", r.exp_num},
                       {"exponent_den", r.exp_den}});
    }
    std::cout << arr.dump() << '\n';
}

size_t oracle_cap_from_env() {
    const char* env = std::getenv("SUBREP_ORACLE_CAP");
    if (env == nullptr || *env == '\0') return 0;  // library default
    return static_cast<size_t>(std::strtoull(env, nullptr, 10));
}

// ---- find ----------------------------------------------------------------

int cmd_find(const InputOptions& in, const std::string& delta_text, const std::string& format) {
    const Rational delta = parse_delta(delta_text);
    const WordPtr word = read_word(in);
    subrep_result* res = nullptr;
    check(subrep_find(word.get(), delta.num, delta.den, &res), kExitIo);
    const ResultPtr guard(res);
    const auto rows = records_of(res);
    if (format == "json")
        print_subreps_json(rows);
    else
        print_subreps_tsv(rows);
    return kExitOk;
}

// ---- runs / repeats --------------------------------------------------------

int cmd_runs(const InputOptions& in) {
    const WordPtr word = read_word(in);
    subrep_result* res = nullptr;
    check(subrep_runs(word.get(), &res), kExitIo);
    const ResultPtr guard(res);
    for (const auto& r : records_of(res))
        std::cout << r.beg << '\t' << r.end << '\t' << r.period << '\t'
                  << render_ratio(r.exp_num, r.exp_den) << '\n';
    return kExitOk;
}

int cmd_repeats(const InputOptions& in, const std::string& delta_text, const std::string& alpha_text) {
    Rational delta;
    if (!delta_text.empty()) {
        delta = parse_delta(delta_text);
    } else {
        // alpha = 1/delta: parse as a plain rational and flip it
        Rational alpha;
        if (!parse_rational(alpha_text, alpha)) die(kExitUsage, "bad alpha '" + alpha_text + "'");
        if (alpha.num <= alpha.den) die(kExitUsage, "alpha must be greater than 1");
        delta.num = alpha.den;
        delta.den = alpha.num;
    }
    const WordPtr word = read_word(in);
    subrep_result* res = nullptr;
    check(subrep_gapped_repeats(word.get(), delta.num, delta.den, &res), kExitIo);
    const ResultPtr guard(res);
    for (const auto& r : records_of(res))
        std::cout << r.beg << '\t' << r.period << '\t' << r.copy_len << '\t' << r.end << '\t'
                  << r.gapped << '\n';
    return kExitOk;
}

// ---- generate --------------------------------------------------------------

int cmd_generate(const std::string& kind, uint64_t n, uint32_t sigma, uint64_t seed, bool ints) {
    subrep_generator gen;
    if (kind == "fibonacci")
        gen = SUBREP_GEN_FIBONACCI;
    else if (kind == "thue_morse")
        gen = SUBREP_GEN_THUE_MORSE;
    else if (kind == "random")
        gen = SUBREP_GEN_RANDOM;
    else
        die(kExitUsage, "unknown generator kind '" + kind + "'");
    subrep_word* w = nullptr;
    check(subrep_word_generate(gen, n, sigma, seed, &w));
    const WordPtr word(w);
    std::vector<uint32_t> syms(subrep_word_length(w));
    if (!syms.empty()) check(subrep_word_symbols(w, syms.data()), kExitIo);
    if (ints) {
        for (size_t i = 0; i < syms.size(); ++i) std::cout << (i ? " " : "") << syms[i];
        std::cout << '\n';
    } else {
        for (uint32_t s : syms) {
            if (s >= 26) die(kExitUsage, "symbol too large for letter output; use --ints");
            std::cout << static_cast<char>('a' + s);
        }
        std::cout << '\n';
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyReport {
    uint64_t words = 0;
    uint64_t comparisons = 0;
};

std::vector<std::tuple<uint64_t, uint64_t, uint64_t>> keyed_rows(const subrep_result* res) {
    std::vector<std::tuple<uint64_t, uint64_t, uint64_t>> rows;
    rows.reserve(subrep_result_count(res));
    for (size_t i = 0; i < subrep_result_count(res); ++i) {
        subrep_record r{};
        check(subrep_result_get(res, i, &r), kExitIo);
        rows.emplace_back(r.beg, r.end, r.period);
    }
    return rows;
}

std::string word_to_text(const subrep_word* w) {
    std::vector<uint32_t> syms(subrep_word_length(w));
    if (!syms.empty()) subrep_word_symbols(w, syms.data());
    std::string out;
    for (size_t i = 0; i < syms.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(syms[i]);
    }
    return out;
}

// Compares the fast path against the oracles for one word and one delta.
// Returns false (and prints the witness) on the first mismatch.
bool verify_word(const subrep_word* w, const Rational& delta, size_t cap, bool per_word,
                 VerifyReport& report) {
    struct Check {
        const char* name;
        subrep_status fast_status;
        ResultPtr fast;
        subrep_status brute_status;
        ResultPtr brute;
    };
    std::vector<Check> checks;
    {
        subrep_result *f = nullptr, *b = nullptr;
        const auto sf = subrep_find(w, delta.num, delta.den, &f);
        const auto sb = subrep_brute_find(w, delta.num, delta.den, cap, &b);
        checks.push_back({"find", sf, ResultPtr(f), sb, ResultPtr(b)});
    }
    {
        subrep_result *f = nullptr, *b = nullptr;
        const auto sf = subrep_runs(w, &f);
        const auto sb = subrep_brute_runs(w, cap, &b);
        checks.push_back({"runs", sf, ResultPtr(f), sb, ResultPtr(b)});
    }
    {
        subrep_result *f = nullptr, *b = nullptr;
        const auto sf = subrep_gapped_repeats(w, delta.num, delta.den, &f);
        const auto sb = subrep_brute_gapped_repeats(w, delta.num, delta.den, cap, &b);
        checks.push_back({"repeats", sf, ResultPtr(f), sb, ResultPtr(b)});
    }
    for (const auto& c : checks) {
        if (c.brute_status == SUBREP_ERR_ORACLE_CAP)
            die(kExitUsage, "word exceeds oracle cap; lower --max-n or raise SUBREP_ORACLE_CAP");
        check(c.fast_status, kExitIo);
        check(c.brute_status, kExitIo);
        ++report.comparisons;
        if (keyed_rows(c.fast.get()) != keyed_rows(c.brute.get())) {
            std::cout << "MISMATCH " << c.name << " delta=" << delta.num << "/" << delta.den
                      << " n=" << subrep_word_length(w) << " word=[" << word_to_text(w) << "]"
                      << " fast=" << subrep_result_count(c.fast.get())
                      << " brute=" << subrep_result_count(c.brute.get()) << "\n";
            return false;
        }
    }
    if (per_word)
        std::cout << "ok n=" << subrep_word_length(w) << " delta=" << delta.num << "/" << delta.den
                  << " word=[" << word_to_text(w) << "]\n";
    return true;
}

int cmd_verify(const std::string& mode, uint32_t sigma, uint32_t max_n, uint64_t count,
               uint64_t seed, const std::vector<std::string>& delta_texts, bool per_word) {
    const size_t cap = oracle_cap_from_env();
    std::vector<Rational> deltas;
    for (const auto& t : delta_texts) deltas.push_back(parse_delta(t));

    VerifyReport report;
    if (mode == "exhaustive") {
        if (deltas.empty()) deltas = {parse_delta("1/2")};
        if (sigma < 1) die(kExitUsage, "--sigma must be at least 1");
        std::vector<uint32_t> syms;
        for (uint32_t n = 0; n <= max_n; ++n) {
            syms.assign(n, 0);
            uint64_t batch = 0;
            while (true) {
                subrep_word* w = nullptr;
                check(subrep_word_from_ints(syms.data(), n, &w));
                const WordPtr word(w);
                ++report.words;
                ++batch;
                for (const auto& d : deltas)
                    if (!verify_word(word.get(), d, cap, per_word, report)) return kExitMismatch;
                // next word in the odometer order
                uint32_t i = 0;
                for (; i < n; ++i) {
                    if (++syms[i] < sigma) break;
                    syms[i] = 0;
                }
                if (i == n) break;
            }
            std::cout << "n=" << n << " sigma=" << sigma << " words=" << batch << " ok\n";
        }
    } else if (mode == "random") {
        std::mt19937_64 rng(seed);
        for (uint64_t i = 0; i < count; ++i) {
            const uint32_t n = 1 + static_cast<uint32_t>(rng() % std::max(1u, max_n));
            const uint32_t s = sigma >= 2 ? sigma : 2 + static_cast<uint32_t>(rng() % 3);
            subrep_word* w = nullptr;
            check(subrep_word_generate(SUBREP_GEN_RANDOM, n, s, rng(), &w));
            const WordPtr word(w);
            ++report.words;
            Rational d;
            if (!deltas.empty()) {
                d = deltas[i % deltas.size()];
            } else {
                // uniform random rational in (0.05, 0.95)
                do {
                    d.den = 2 + rng() % 998;
                    d.num = 1 + rng() % (d.den - 1);
                } while (!(20 * d.num > d.den && 20 * d.num < 19 * d.den));
            }
            if (!verify_word(word.get(), d, cap, per_word, report)) return kExitMismatch;
            if ((i + 1) % 100 == 0)
                std::cout << "checked " << (i + 1) << "/" << count << " random words ok\n";
        }
    } else {
        die(kExitUsage, "unknown verify mode '" + mode + "'");
    }
    std::cout << "verified " << report.words << " words, " << report.comparisons
              << " comparisons: all matched\n";
    return kExitOk;
}

// ---- bench -----------------------------------------------------------------

int cmd_bench(const std::vector<uint64_t>& lens, const std::string& delta_text,
              const std::string& gen_kind, uint32_t sigma, uint64_t seed) {
    const Rational delta = parse_delta(delta_text);
    subrep_generator gen;
    if (gen_kind == "fibonacci")
        gen = SUBREP_GEN_FIBONACCI;
    else if (gen_kind == "thue_morse")
        gen = SUBREP_GEN_THUE_MORSE;
    else if (gen_kind == "random")
        gen = SUBREP_GEN_RANDOM;
    else
        die(kExitUsage, "unknown generator kind '" + gen_kind + "'");

    std::cout << "n,delta,index_s,runs_s,repeats_s,pairs_s,stage1_s,stage2_s,stage3_s,total_s,"
                 "runs,gr,gr_star,max_lqt\n";
    char buf[64];
    for (uint64_t n : lens) {
        if (n == 0) continue;
        subrep_word* w = nullptr;
        check(subrep_word_generate(gen, n, sigma, seed, &w));
        const WordPtr word(w);
        subrep_result* res = nullptr;
        subrep_stats st{};
        check(subrep_find_with_stats(word.get(), delta.num, delta.den, &res, &st), kExitIo);
        const ResultPtr guard(res);
        const double total = st.seconds_index + st.seconds_runs + st.seconds_repeats +
                             st.seconds_pairs + st.seconds_stage1 + st.seconds_stage2 +
                             st.seconds_stage3;
        std::cout << n << ',' << render_ratio(delta.num, delta.den);
        for (double v : {st.seconds_index, st.seconds_runs, st.seconds_repeats, st.seconds_pairs,
                         st.seconds_stage1, st.seconds_stage2, st.seconds_stage3, total}) {
            std::snprintf(buf, sizeof buf, ",%.6f", v);
            std::cout << buf;
        }
        std::cout << ',' << st.run_count << ',' << st.gapped_repeat_count << ','
                  << st.output_count << ',' << st.max_tree_size << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal delta-subrepetition detection"};
    app.require_subcommand(1);

    InputOptions find_in, runs_in, repeats_in;
    std::string find_delta, find_format = "tsv";
    auto* find_cmd = app.add_subcommand("find", "find all maximal delta-subrepetitions");
    add_input_options(find_cmd, find_in);
    find_cmd->add_option("--delta", find_delta, "delta as decimal or num/den")->required();
    find_cmd->add_option("--format", find_format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();

    auto* runs_cmd = app.add_subcommand("runs", "list all maximal repetitions");
    add_input_options(runs_cmd, runs_in);

    std::string repeats_delta, repeats_alpha;
    auto* repeats_cmd = app.add_subcommand("repeats", "list all maximal alpha-gapped repeats");
    add_input_options(repeats_cmd, repeats_in);
    auto* rd = repeats_cmd->add_option("--delta", repeats_delta, "delta as decimal or num/den");
    repeats_cmd->add_option("--alpha", repeats_alpha, "alpha = 1/delta, must exceed 1")->excludes(rd);

    std::string gen_kind = "random";
    uint64_t gen_n = 0, gen_seed = 0;
    uint32_t gen_sigma = 2;
    bool gen_ints = false;
    auto* gen_cmd = app.add_subcommand("generate", "emit a deterministic test word");
    gen_cmd->add_option("--kind", gen_kind, "fibonacci|thue_morse|random")->capture_default_str();
    gen_cmd->add_option("--n", gen_n, "word length")->required();
    gen_cmd->add_option("--sigma", gen_sigma, "alphabet size (random)")->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "random seed")->capture_default_str();
    gen_cmd->add_flag("--ints", gen_ints, "print integers instead of letters");

    std::string verify_mode = "random";
    uint32_t verify_sigma = 2, verify_max_n = 12;
    uint64_t verify_count = 100, verify_seed = 1;
    std::vector<std::string> verify_deltas;
    bool verify_per_word = false;
    auto* verify_cmd = app.add_subcommand("verify", "compare the fast path against the oracles");
    verify_cmd->add_option("--mode", verify_mode, "exhaustive|random")->capture_default_str();
    verify_cmd->add_option("--sigma", verify_sigma, "alphabet size")->capture_default_str();
    verify_cmd->add_option("--max-n", verify_max_n, "largest word length")->capture_default_str();
    verify_cmd->add_option("--count", verify_count, "random words to test")->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--delta", verify_deltas, "delta values (repeatable)");
    verify_cmd->add_flag("--per-word", verify_per_word, "print one line per word");

    std::vector<uint64_t> bench_lens;
    std::string bench_delta = "0.5", bench_gen = "random";
    uint32_t bench_sigma = 2;
    uint64_t bench_seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "time the pipeline stages (CSV)");
    bench_cmd->add_option("--len", bench_lens, "word lengths (repeatable)");
    bench_cmd->add_option("--delta", bench_delta, "delta as decimal or num/den")->capture_default_str();
    bench_cmd->add_option("--gen", bench_gen, "fibonacci|thue_morse|random")->capture_default_str();
    bench_cmd->add_option("--sigma", bench_sigma, "alphabet size (random)")->capture_default_str();
    bench_cmd->add_option("--seed", bench_seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (find_cmd->parsed()) return cmd_find(find_in, find_delta, find_format);
    if (runs_cmd->parsed()) return cmd_runs(runs_in);
    if (repeats_cmd->parsed()) {
        if (repeats_delta.empty() && repeats_alpha.empty())
            die(kExitUsage, "repeats needs --delta or --alpha");
        return cmd_repeats(repeats_in, repeats_delta, repeats_alpha);
    }
    if (gen_cmd->parsed()) return cmd_generate(gen_kind, gen_n, gen_sigma, gen_seed, gen_ints);
    if (verify_cmd->parsed())
        return cmd_verify(verify_mode, verify_sigma, verify_max_n, verify_count, verify_seed,
                          verify_deltas, verify_per_word);
    if (bench_cmd->parsed())
        return cmd_bench(bench_lens, bench_delta, bench_gen, bench_sigma, bench_seed);
    return kExitUsage;
}
