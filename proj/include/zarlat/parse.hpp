#pragma once

#include <cstddef>
#include <string>

#include "zarlat/ring.hpp"

namespace zarlat {

/// Malformed element text; `offset` is the byte position of the problem.
struct ParseError : UsageError {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t offset_)
        : UsageError(msg + " at offset " + std::to_string(offset_)), offset(offset_) {}
};

/// Parse the textual form of a ring element. Integers and residues are an
/// optional sign plus decimal digits; polynomials are sums of terms
///   c | c*v^k | v^k | v      (rational c written a or a/b)
/// joined by + and -, with insignificant whitespace. parse of print is the
/// identity on canonical forms; print of parse canonicalizes.
Elem parse_elem(const std::string& text, const RingPtr& ring);

} // namespace zarlat
