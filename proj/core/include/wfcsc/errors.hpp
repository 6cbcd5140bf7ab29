#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wfcsc {

// Invalid problem data (out-of-range element, uncoverable universe, ...).
class BuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. byte_offset points at the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// A caller broke an operation's precondition (e.g. propagating an inactive
// set). Signals a bug in the calling code, not bad input.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wfcsc
