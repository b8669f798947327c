#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszul {

// Malformed input text (polynomial grammar or spec file), exit code 1.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t col)
        : std::runtime_error(what + " at line " + std::to_string(line) +
                             ", column " + std::to_string(col)),
          bare(what), line(line), col(col) {}
    std::string bare;  // message without the position suffix
    std::size_t line;
    std::size_t col;
};

class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured bound was exhausted or a certified answer is out of reach,
// exit code 2.  The message carries a remediation hint.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The ideal generated by the section components has positive-dimensional
// zero locus, so quotient-space constructions do not terminate.
class NotZeroDimensional : public BoundExceeded {
public:
    using BoundExceeded::BoundExceeded;
};

// No pure power of some variable lies in the ideal within the power bound.
class NotLocalAtOrigin : public BoundExceeded {
public:
    using BoundExceeded::BoundExceeded;
};

// Broken internal invariant, exit code 3.  Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

}
