#pragma once

#include <stdexcept>
#include <string>

namespace zarlat {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller-side mistakes: mixed rings, failed preconditions, malformed input.
// The CLI maps these to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

// A verified invariant did not hold. Signals a bug in this library, never a
// mathematical failure of the input. CLI exit code 3.
struct InternalError : Error {
    using Error::Error;
};

// A configurable work budget was exhausted (e.g. the S-pair budget of the
// Groebner engine). CLI exit code 3.
struct ResourceError : Error {
    using Error::Error;
};

} // namespace zarlat
