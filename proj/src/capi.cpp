#include "subrep/subrep.h"

#include <new>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "subrep_filter.hpp"
#include "word.hpp"

struct subrep_word {
    subrep::Word word;
};

struct subrep_result {
    subrep_record_kind kind;
    std::vector<subrep_record> records;
};

namespace {

subrep_status status_of(subrep::ErrorCode code) {
    switch (code) {
        case subrep::ErrorCode::alphabet: return SUBREP_ERR_ALPHABET;
        case subrep::ErrorCode::parse: return SUBREP_ERR_PARSE;
        case subrep::ErrorCode::delta_range: return SUBREP_ERR_DELTA;
        case subrep::ErrorCode::oracle_cap: return SUBREP_ERR_ORACLE_CAP;
        case subrep::ErrorCode::position: return SUBREP_ERR_POSITION;
        case subrep::ErrorCode::empty_factor: return SUBREP_ERR_ARGUMENT;
        case subrep::ErrorCode::duplicate_repeat: return SUBREP_ERR_INTERNAL;
        case subrep::ErrorCode::pair_mismatch: return SUBREP_ERR_ARGUMENT;
        case subrep::ErrorCode::internal: return SUBREP_ERR_INTERNAL;
    }
    return SUBREP_ERR_INTERNAL;
}

template <typename Fn>
subrep_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const subrep::Error& e) {
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        return SUBREP_ERR_NOMEM;
    } catch (...) {
        return SUBREP_ERR_INTERNAL;
    }
}

subrep_record record_of(const subrep::Subrepetition& s) {
    subrep_record r{};
    r.beg = s.beg;
    r.end = s.end;
    r.period = s.p;
    r.copy_len = s.end - s.beg + 1 - s.p;
    r.exp_num = s.e_num;
    r.exp_den = s.e_den;
    r.gapped = 1;
    return r;
}

subrep_record record_of(const subrep::Run& run) {
    subrep_record r{};
    r.beg = run.beg;
    r.end = run.end;
    r.period = run.p;
    r.copy_len = run.len() - run.p;
    const std::uint64_t g = std::gcd<std::uint64_t>(run.len(), run.p);
    r.exp_num = run.len() / g;
    r.exp_den = run.p / g;
    r.gapped = 0;
    return r;
}

subrep_record record_of(const subrep::MaxRepeat& rep) {
    subrep_record r{};
    r.beg = rep.beg;
    r.end = rep.end();
    r.period = rep.p;
    r.copy_len = rep.c;
    const std::uint64_t len = rep.p + rep.c;
    const std::uint64_t g = std::gcd<std::uint64_t>(len, rep.p);
    r.exp_num = len / g;
    r.exp_den = rep.p / g;
    r.gapped = rep.gapped() ? 1 : 0;
    return r;
}

template <typename T>
subrep_result* make_result(subrep_record_kind kind, const std::vector<T>& rows) {
    auto* res = new subrep_result{kind, {}};
    res->records.reserve(rows.size());
    for (const T& row : rows) res->records.push_back(record_of(row));
    return res;
}

subrep_status make_word(std::vector<std::uint32_t> symbols, subrep_word** out) {
    *out = new subrep_word{subrep::Word(std::move(symbols))};
    return SUBREP_OK;
}

std::size_t effective_cap(std::size_t cap) { return cap == 0 ? subrep::oracle::kDefaultCap : cap; }

}  // namespace

extern "C" {

const char* subrep_version(void) { return "1.0.0"; }

const char* subrep_status_message(subrep_status status) {
    switch (status) {
        case SUBREP_OK: return "ok";
        case SUBREP_ERR_ARGUMENT: return "invalid argument";
        case SUBREP_ERR_ALPHABET: return "symbol exceeds alphabet bound";
        case SUBREP_ERR_PARSE: return "malformed input token";
        case SUBREP_ERR_DELTA: return "delta must be a rational in (0, 1)";
        case SUBREP_ERR_ORACLE_CAP: return "word exceeds brute-force size cap";
        case SUBREP_ERR_POSITION: return "position out of range";
        case SUBREP_ERR_INTERNAL: return "internal invariant violation";
        case SUBREP_ERR_NOMEM: return "out of memory";
    }
    return "unknown status";
}

subrep_status subrep_word_from_bytes(const uint8_t* data, size_t len, subrep_word** out) {
    if (out == nullptr || (data == nullptr && len > 0)) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        std::vector<std::uint32_t> syms(data, data + len);
        return make_word(std::move(syms), out);
    });
}

subrep_status subrep_word_from_ints(const uint32_t* symbols, size_t len, subrep_word** out) {
    if (out == nullptr || (symbols == nullptr && len > 0)) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        std::vector<std::uint32_t> syms(symbols, symbols + len);
        return make_word(std::move(syms), out);
    });
}

subrep_status subrep_word_parse_ints(const char* text, subrep_word** out) {
    if (out == nullptr || text == nullptr) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        *out = new subrep_word{subrep::Word::from_int_text(text)};
        return SUBREP_OK;
    });
}

subrep_status subrep_word_generate(subrep_generator kind, uint64_t n, uint32_t sigma,
                                   uint64_t seed, subrep_word** out) {
    if (out == nullptr) return SUBREP_ERR_ARGUMENT;
    subrep::GeneratorKind k;
    switch (kind) {
        case SUBREP_GEN_FIBONACCI: k = subrep::GeneratorKind::fibonacci; break;
        case SUBREP_GEN_THUE_MORSE: k = subrep::GeneratorKind::thue_morse; break;
        case SUBREP_GEN_RANDOM: k = subrep::GeneratorKind::random_uniform; break;
        default: return SUBREP_ERR_ARGUMENT;
    }
    if (n > (1ull << 31) - 2) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        *out = new subrep_word{subrep::generate(k, static_cast<std::uint32_t>(n), sigma, seed)};
        return SUBREP_OK;
    });
}

size_t subrep_word_length(const subrep_word* word) { return word == nullptr ? 0 : word->word.size(); }

subrep_status subrep_word_symbols(const subrep_word* word, uint32_t* buf) {
    if (word == nullptr || (buf == nullptr && word->word.size() > 0)) return SUBREP_ERR_ARGUMENT;
    const auto syms = word->word.symbols();
    std::copy(syms.begin(), syms.end(), buf);
    return SUBREP_OK;
}

void subrep_word_free(subrep_word* word) { delete word; }

subrep_status subrep_delta_parse(const char* text, uint64_t* num, uint64_t* den) {
    if (text == nullptr || num == nullptr || den == nullptr) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        const subrep::Delta d = subrep::Delta::parse(text);
        *num = d.num();
        *den = d.den();
        return SUBREP_OK;
    });
}

subrep_status subrep_find_with_stats(const subrep_word* word, uint64_t delta_num,
                                     uint64_t delta_den, subrep_result** out,
                                     subrep_stats* stats) {
    if (word == nullptr || out == nullptr) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        const subrep::Delta delta(delta_num, delta_den);
        subrep::FindStats fs;
        const auto rows = subrep::find_subrepetitions(word->word, delta, &fs);
        *out = make_result(SUBREP_RECORDS_SUBREPETITIONS, rows);
        if (stats != nullptr) {
            stats->seconds_index = fs.seconds_index;
            stats->seconds_runs = fs.seconds_runs;
            stats->seconds_repeats = fs.seconds_repeats;
            stats->seconds_pairs = fs.seconds_pairs;
            stats->seconds_stage1 = fs.seconds_stage1;
            stats->seconds_stage2 = fs.seconds_stage2;
            stats->seconds_stage3 = fs.seconds_stage3;
            stats->run_count = fs.run_count;
            stats->gapped_repeat_count = fs.gr_size;
            stats->output_count = fs.output_size;
            stats->max_tree_size = fs.max_lqt;
            stats->max_close_runs = fs.max_alpha_close;
        }
        return SUBREP_OK;
    });
}

subrep_status subrep_find(const subrep_word* word, uint64_t delta_num, uint64_t delta_den,
                          subrep_result** out) {
    return subrep_find_with_stats(word, delta_num, delta_den, out, nullptr);
}

subrep_status subrep_runs(const subrep_word* word, subrep_result** out) {
    if (word == nullptr || out == nullptr) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        const subrep::LceIndex idx(word->word);
        const auto rows = subrep::compute_runs(word->word, idx);
        *out = make_result(SUBREP_RECORDS_RUNS, rows);
        return SUBREP_OK;
    });
}

subrep_status subrep_gapped_repeats(const subrep_word* word, uint64_t delta_num,
                                    uint64_t delta_den, subrep_result** out) {
    if (word == nullptr || out == nullptr) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        const subrep::Delta delta(delta_num, delta_den);
        const subrep::LceIndex idx(word->word);
        const auto rows = subrep::compute_gapped_repeats(word->word, idx, delta);
        *out = make_result(SUBREP_RECORDS_REPEATS, rows);
        return SUBREP_OK;
    });
}

subrep_status subrep_brute_find(const subrep_word* word, uint64_t delta_num, uint64_t delta_den,
                                size_t cap, subrep_result** out) {
    if (word == nullptr || out == nullptr) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        const subrep::Delta delta(delta_num, delta_den);
        const auto rows = subrep::oracle::brute_subrepetitions(word->word, delta, effective_cap(cap));
        *out = make_result(SUBREP_RECORDS_SUBREPETITIONS, rows);
        return SUBREP_OK;
    });
}

subrep_status subrep_brute_runs(const subrep_word* word, size_t cap, subrep_result** out) {
    if (word == nullptr || out == nullptr) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        const auto rows = subrep::oracle::brute_runs(word->word, effective_cap(cap));
        *out = make_result(SUBREP_RECORDS_RUNS, rows);
        return SUBREP_OK;
    });
}

subrep_status subrep_brute_gapped_repeats(const subrep_word* word, uint64_t delta_num,
                                          uint64_t delta_den, size_t cap, subrep_result** out) {
    if (word == nullptr || out == nullptr) return SUBREP_ERR_ARGUMENT;
    return guarded([&] {
        const subrep::Delta delta(delta_num, delta_den);
        const auto rows =
            subrep::oracle::brute_gapped_repeats(word->word, delta, effective_cap(cap));
        *out = make_result(SUBREP_RECORDS_REPEATS, rows);
        return SUBREP_OK;
    });
}

subrep_record_kind subrep_result_kind(const subrep_result* result) {
    return result == nullptr ? SUBREP_RECORDS_SUBREPETITIONS : result->kind;
}

size_t subrep_result_count(const subrep_result* result) {
    return result == nullptr ? 0 : result->records.size();
}

subrep_status subrep_result_get(const subrep_result* result, size_t index, subrep_record* out) {
    if (result == nullptr || out == nullptr) return SUBREP_ERR_ARGUMENT;
    if (index >= result->records.size()) return SUBREP_ERR_POSITION;
    *out = result->records[index];
    return SUBREP_OK;
}

void subrep_result_free(subrep_result* result) { delete result; }

}  // extern "C"
