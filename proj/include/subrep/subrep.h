/* subrep - detection of maximal delta-subrepetitions in integer words.
 *
 * C interface of the shared library. Handles are opaque; every function
 * returns a status code and writes results through out parameters. Words and
 * results are immutable once created and may be read from several threads;
 * creation and destruction of a given handle must not race.
 *
 * Positions are 1-based inclusive. delta is the exact rational num/den with
 * 0 < num/den < 1 (den at most 10^9 after reduction).
 */
#ifndef SUBREP_H
#define SUBREP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subrep_status {
    SUBREP_OK = 0,
    SUBREP_ERR_ARGUMENT = 1,   /* null pointer or invalid enum/argument */
    SUBREP_ERR_ALPHABET = 2,   /* symbol exceeds the alphabet bound */
    SUBREP_ERR_PARSE = 3,      /* malformed integer or rational token */
    SUBREP_ERR_DELTA = 4,      /* delta outside (0, 1) or unrepresentable */
    SUBREP_ERR_ORACLE_CAP = 5, /* word exceeds the brute-force size cap */
    SUBREP_ERR_POSITION = 6,   /* position outside 1..n */
    SUBREP_ERR_INTERNAL = 7,   /* broken invariant inside the library */
    SUBREP_ERR_NOMEM = 8
} subrep_status;

typedef enum subrep_generator {
    SUBREP_GEN_FIBONACCI = 0,
    SUBREP_GEN_THUE_MORSE = 1,
    SUBREP_GEN_RANDOM = 2
} subrep_generator;

typedef enum subrep_record_kind {
    SUBREP_RECORDS_SUBREPETITIONS = 0,
    SUBREP_RECORDS_RUNS = 1,
    SUBREP_RECORDS_REPEATS = 2
} subrep_record_kind;

typedef struct subrep_word subrep_word;
typedef struct subrep_result subrep_result;

/* One output row. For subrepetitions and runs: beg, end, period and the
 * exact exponent (end-beg+1)/period reduced. For repeats: beg, period,
 * copy_len, end, gapped; the exponent fields carry (period+copy_len)/period.
 */
typedef struct subrep_record {
    uint64_t beg;
    uint64_t end;
    uint64_t period;
    uint64_t copy_len;
    uint64_t exp_num;
    uint64_t exp_den;
    int32_t gapped;
} subrep_record;

/* Per-stage wall times and counters of one detection call. */
typedef struct subrep_stats {
    double seconds_index;
    double seconds_runs;
    double seconds_repeats;
    double seconds_pairs;
    double seconds_stage1;
    double seconds_stage2;
    double seconds_stage3;
    uint64_t run_count;
    uint64_t gapped_repeat_count; /* |GR| */
    uint64_t output_count;        /* |GR*| */
    uint64_t max_tree_size;       /* max |LQT_i| over the sweep */
    uint64_t max_close_runs;      /* most alpha-close runs seen for one run */
} subrep_stats;

const char* subrep_version(void);
const char* subrep_status_message(subrep_status status);

/* --- words ------------------------------------------------------------- */

subrep_status subrep_word_from_bytes(const uint8_t* data, size_t len, subrep_word** out);
subrep_status subrep_word_from_ints(const uint32_t* symbols, size_t len, subrep_word** out);
/* Whitespace-separated decimal tokens. */
subrep_status subrep_word_parse_ints(const char* text, subrep_word** out);
subrep_status subrep_word_generate(subrep_generator kind, uint64_t n, uint32_t sigma,
                                   uint64_t seed, subrep_word** out);
size_t subrep_word_length(const subrep_word* word);
/* Copies all symbols into buf, which must hold subrep_word_length entries. */
subrep_status subrep_word_symbols(const subrep_word* word, uint32_t* buf);
void subrep_word_free(subrep_word* word);

/* Parses "num/den" or a decimal such as "0.25" into an exact rational. */
subrep_status subrep_delta_parse(const char* text, uint64_t* num, uint64_t* den);

/* --- detection ---------------------------------------------------------- */

/* All maximal delta-subrepetitions, sorted by (beg, period). */
subrep_status subrep_find(const subrep_word* word, uint64_t delta_num, uint64_t delta_den,
                          subrep_result** out);
subrep_status subrep_find_with_stats(const subrep_word* word, uint64_t delta_num,
                                     uint64_t delta_den, subrep_result** out,
                                     subrep_stats* stats);
/* All maximal repetitions, sorted by (beg, period). */
subrep_status subrep_runs(const subrep_word* word, subrep_result** out);
/* All maximal 1/delta-gapped repeats, sorted by (beg, period). */
subrep_status subrep_gapped_repeats(const subrep_word* word, uint64_t delta_num,
                                    uint64_t delta_den, subrep_result** out);

/* --- brute-force references (cap = 0 selects the built-in default) ------ */

subrep_status subrep_brute_find(const subrep_word* word, uint64_t delta_num, uint64_t delta_den,
                                size_t cap, subrep_result** out);
subrep_status subrep_brute_runs(const subrep_word* word, size_t cap, subrep_result** out);
subrep_status subrep_brute_gapped_repeats(const subrep_word* word, uint64_t delta_num,
                                          uint64_t delta_den, size_t cap, subrep_result** out);

/* --- results ------------------------------------------------------------ */

subrep_record_kind subrep_result_kind(const subrep_result* result);
size_t subrep_result_count(const subrep_result* result);
subrep_status subrep_result_get(const subrep_result* result, size_t index, subrep_record* out);
void subrep_result_free(subrep_result* result);

#ifdef __cplusplus
}
#endif

#endif /* SUBREP_H */
