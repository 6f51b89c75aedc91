#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilpoly {

// Every recoverable failure in the library throws Error with a stable code.
// The CLI maps the code name to a message and exit status 1; anything else
// escaping a library call is a bug.
enum class Errc {
    syntax,                  // malformed polynomial text; offset() points at the byte
    non_integral_reduction,  // u(ax)/a has a fractional coefficient
    zero_argument,           // prime_support(0)
    duplicate_node,          // repeated interpolation node
    not_realizable,          // no integer polynomial realizes the data
    invalid_sequence,        // sequence is not distinct-nonzero entries ending in one 0
    zero_start,              // enumeration at r = 0 (infinite parameterized family)
    domain,                  // argument outside an operation's domain
    unknown_suite,           // verify suite name not registered
    non_minimal_input,       // preperiod/cycle not in minimal form
    invalid_form,            // bounded-form parameters violate the form's constraints
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, std::size_t offset = 0)
        : std::runtime_error(message), code_(code), offset_(offset) {}

    Errc code() const noexcept { return code_; }
    std::size_t offset() const noexcept { return offset_; }  // meaningful for Errc::syntax

private:
    Errc code_;
    std::size_t offset_;
};

} // namespace nilpoly
