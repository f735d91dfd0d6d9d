#pragma once

#include <stdexcept>
#include <string>

namespace fgc {

// Bad caller input (out-of-range vertex, invalid family parameter, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configurable limit (search budget, generation cap) was exceeded.
// Always an explicit failure, never a silently truncated answer.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two routes that must agree (recursion vs closed form, constructed witness
// vs validator) disagreed.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace fgc
