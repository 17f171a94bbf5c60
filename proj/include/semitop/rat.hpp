#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace semitop {

// Exact rational arithmetic for interval endpoints and path breakpoints.
// Verdicts in this library are boundary-sensitive, so there is no floating
// point anywhere; values are kept in lowest terms by the backend.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q", "p" or "-p/q". Throws input_error on malformed text or q <= 0.
Rat parse_rat(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rat(const Rat& r);

inline bool in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }

inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / 2; }

}  // namespace semitop
