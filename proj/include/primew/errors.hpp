#pragma once

#include <stdexcept>
#include <string>

namespace primew {

// Raised when a value cannot be resolved at the precision it carries
// (e.g. rounding a power whose integer part is not pinned down).
struct precision_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Bracketed root finding failed to locate a sign change.
struct bracket_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_no(line) {}
    std::size_t line_no;
};

// Request exceeds a configured capacity (sieve limit, memory bound).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search ran out of its step budget before reaching its target.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace primew
