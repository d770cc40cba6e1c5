#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "knotfill/laurent.hpp"

namespace knotfill {

/// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos);
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

// Polynomial text grammar: signed integer-coefficient monomials in `t`
// (one variable) or `t1`, `t2` (two variables), exponents written `t^k`
// with k a signed integer, factors joined by `*`. Whitespace-insensitive.
// Examples: "t^2 - 1 + t^-2", "-t1*t2^2 + t1*t2", "3*t^4".
LaurentPoly1 parse_poly1(const std::string& text);
LaurentPoly2 parse_poly2(const std::string& text);

/// Dispatches on the variable names found in the text; a pure constant
/// parses as one-variable.
std::variant<LaurentPoly1, LaurentPoly2> parse_poly(const std::string& text);

struct BraidLetter {
    int index;  // generator index, 1-based
    int sign;   // +1 or -1
};

// Braid word grammar: `s1^-2 s2 s1^3 ...` -- generator `s<i>` with an
// optional integer exponent. Returns the expanded letter sequence.
std::vector<BraidLetter> parse_braid_letters(const std::string& text);

}  // namespace knotfill
