#pragma once

#include <stdexcept>
#include <string>

namespace gossip {

// Bad caller-supplied parameter: non-prime p, alphabet mismatch, ...
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed structure: wrong block size, duplicate or out-of-range point.
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input text could not be parsed. `line` is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Work would exceed the configured budget or overflow 64-bit arithmetic.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quantities that must agree do not (non-integral ratio, count mismatch).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request falls outside the pirate model (oversized coalition without the flag).
struct ModelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Word and code disagree (a symbol with no owning codeword).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gossip
