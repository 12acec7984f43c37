#pragma once

#include <stdexcept>
#include <string>

namespace subrep {

// Stable error identifiers, shared with the C API status codes.
enum class ErrorCode {
    alphabet = 1,       // symbol exceeds the polynomial alphabet bound
    parse = 2,          // malformed integer token or rational
    delta_range = 3,    // delta outside (0, 1)
    oracle_cap = 4,     // word longer than the brute-force size cap
    position = 5,       // query position outside 1..n
    empty_factor = 6,   // minimal period of an empty factor
    duplicate_repeat = 7,   // two repeats with equal (beg, period) key
    pair_mismatch = 8,  // runs of a pair do not share cyclic roots
    internal = 9,       // broken internal invariant (implementation bug)
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct AlphabetError : Error {
    explicit AlphabetError(const std::string& w) : Error(ErrorCode::alphabet, w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorCode::parse, w) {}
};
struct DeltaRangeError : Error {
    explicit DeltaRangeError(const std::string& w) : Error(ErrorCode::delta_range, w) {}
};
struct OracleSizeError : Error {
    explicit OracleSizeError(const std::string& w) : Error(ErrorCode::oracle_cap, w) {}
};
struct PositionError : Error {
    explicit PositionError(const std::string& w) : Error(ErrorCode::position, w) {}
};
struct EmptyFactorError : Error {
    explicit EmptyFactorError(const std::string& w) : Error(ErrorCode::empty_factor, w) {}
};
struct DuplicateRepeatError : Error {
    explicit DuplicateRepeatError(const std::string& w) : Error(ErrorCode::duplicate_repeat, w) {}
};
struct PairMismatchError : Error {
    explicit PairMismatchError(const std::string& w) : Error(ErrorCode::pair_mismatch, w) {}
};
struct InternalInvariantError : Error {
    explicit InternalInvariantError(const std::string& w) : Error(ErrorCode::internal, w) {}
};

}  // namespace subrep
