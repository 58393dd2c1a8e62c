#pragma once

#include <stdexcept>
#include <string>

namespace corank {

// Operands live in different ambient variable contexts.
struct ContextError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad argument value: out-of-range index, malformed profile, duplicate roots.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Matrix shape violation (non-square determinant, index out of range).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Symbolic work refused above the desk-scale guard without an override.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure: an inexact interior division or a failed
// build-time crosscheck. Always a bug, never a usage error.
struct KernelError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace corank
