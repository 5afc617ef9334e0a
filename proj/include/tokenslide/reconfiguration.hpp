#pragma once

#include "tokenslide/interval_graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tokenslide {

// One token slide along an edge.
struct Move {
    std::string from;
    std::string to;
};

inline bool operator==(const Move& a, const Move& b) {
    return a.from == b.from && a.to == b.to;
}
inline bool operator!=(const Move& a, const Move& b) { return !(a == b); }

using ReconfigSequence = std::vector<Move>;

// An independent set whose tokens are listed in line order: token p lies
// entirely left of token p+1. All operations below preserve this order.
using Configuration = std::vector<std::string>;

bool is_independent(const IntervalGraph& g, const std::vector<std::string>& ids);

// Sorts ids into line order and validates: known, distinct, independent.
Configuration make_configuration(const IntervalGraph& g, const std::vector<std::string>& ids);

// True when cfg is line-sorted, duplicate-free, and independent in g.
bool is_valid_configuration(const IntervalGraph& g, const Configuration& cfg);

// Slides one token. Throws MoveError with the first failing check among:
// from-not-in-config, to-occupied, non-edge, independence-violated.
Configuration apply_move(const IntervalGraph& g, const Configuration& cfg, const Move& mv);

// Applies the first t moves. Throws SequenceError carrying the 1-based index
// of the first failing step.
Configuration apply_prefix(const IntervalGraph& g, const Configuration& cfg,
                           const ReconfigSequence& s, std::size_t t);

struct ValidationReport {
    bool valid = false;
    std::size_t failed_step = 0; // 1-based; 0 when valid
    MoveErrorKind failure_kind = MoveErrorKind::from_not_in_config;
    std::string failure_reason;  // empty when valid
    Configuration end;           // configuration after the longest valid prefix
    // 1-based position of the moved token, one entry per applied step.
    std::vector<std::size_t> moved_positions;
    // True when every applied step left its token's position index unchanged.
    bool order_preserved = true;
    // Present iff expected_end was given: valid && end == *expected_end.
    std::optional<bool> end_matches;
};

ValidationReport validate_sequence(const IntervalGraph& g, const Configuration& start,
                                   const ReconfigSequence& s,
                                   const std::optional<Configuration>& expected_end = std::nullopt);

// Moves reversed and each (u,v) flipped to (v,u).
ReconfigSequence reverse_sequence(const ReconfigSequence& s);

// Raised when a splice hypothesis fails; carries the witness configuration.
struct SpliceError : InputError {
    Configuration offending;
    std::size_t config_index; // t such that the t-th traversed configuration violates
    SpliceError(const std::string& what, Configuration offending_, std::size_t config_index_)
        : InputError(what), offending(std::move(offending_)), config_index(config_index_) {}
};

struct SpliceResult {
    Configuration start; // the aligned start configuration A'
    ReconfigSequence seq;
};

// Given a valid sequence s from `start` to some X with l = |start| tokens and
// cut indices 0 <= i < j <= l+1, checks by full replay that
//   i >= 1  implies  X[i] is the <=_right-minimum of position-i tokens over
//                    every traversed configuration, and
//   j <= l  implies  X[j] is the <=_left-maximum of position-j tokens,
// then returns A' = (X[1..i], start[i+1..j-1], X[j..l]) together with the
// subsequence of s made of the steps that moved a token at a position
// strictly between i and j (position taken just before the step). A' is
// independent and the subsequence is valid from A' to X; callers can check
// this with validate_sequence.
SpliceResult splice(const IntervalGraph& g, const Configuration& start,
                    const ReconfigSequence& s, std::size_t i, std::size_t j);

} // namespace tokenslide
