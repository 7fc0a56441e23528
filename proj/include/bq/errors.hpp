#pragma once

#include <stdexcept>
#include <string>

namespace bq {

// Malformed input (files, cycle notation, Gauss codes). Distinct from a
// well-formed table that merely fails an axiom.
struct format_error : std::runtime_error {
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition violation on otherwise well-formed data (non-medial target,
// non-congruence partition, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bq
