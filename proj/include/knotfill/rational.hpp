#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace knotfill {

// All arithmetic in this library is exact: arbitrary-precision integers for
// polynomial coefficients, exact rationals for d-invariants. No floating
// point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical rational text form: "num/den", with "/den" elided when den == 1.
std::string rat_str(const Rat& r);

// Parses "a/b" or plain integer text. Throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_parse(const std::string& text);

}  // namespace knotfill
