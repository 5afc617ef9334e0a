#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tokenslide {

// Bad input at an API or file boundary. The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant (potential not increasing, emitted sequence
// over its length bound, ...). The CLI maps this to exit code 3.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// The four ways a single token slide can be rejected, in check order.
enum class MoveErrorKind {
    from_not_in_config,
    to_occupied,
    non_edge,
    independence_violated,
};

const char* move_error_name(MoveErrorKind kind);

struct MoveError : InputError {
    MoveErrorKind kind;
    MoveError(MoveErrorKind kind_, const std::string& what)
        : InputError(what), kind(kind_) {}
};

// A move error with the 1-based index of the offending step.
struct SequenceError : MoveError {
    std::size_t step;
    SequenceError(std::size_t step_, MoveErrorKind kind_, const std::string& what)
        : MoveError(kind_, what), step(step_) {}
};

} // namespace tokenslide
