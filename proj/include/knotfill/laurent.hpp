#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "knotfill/rational.hpp"

namespace knotfill {

/// One-variable Laurent polynomial over the integers, stored as a finitely
/// supported map from exponent to nonzero coefficient.
class LaurentPoly1 {
public:
    using Map = std::map<long, Int>;

    LaurentPoly1() = default;
    static LaurentPoly1 term(long exp, Int coeff);
    static LaurentPoly1 constant(Int c) { return term(0, std::move(c)); }
    static LaurentPoly1 one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }
    const Map& coeffs() const { return coeffs_; }
    Int coeff(long exp) const;
    void add_term(long exp, const Int& coeff);

    // Degree queries; invalid on the zero polynomial.
    long low_deg() const;
    long high_deg() const;

    LaurentPoly1 operator+(const LaurentPoly1& o) const;
    LaurentPoly1 operator-(const LaurentPoly1& o) const;
    LaurentPoly1 operator*(const LaurentPoly1& o) const;
    LaurentPoly1 operator-() const;
    bool operator==(const LaurentPoly1& o) const { return coeffs_ == o.coeffs_; }

    /// Multiplication by the unit t^k.
    LaurentPoly1 shifted(long k) const;
    /// Substitution t -> t^-1.
    LaurentPoly1 mirrored() const;

    Int value_at_one() const;

    /// True iff coeff(j) == coeff(-j) for all j.
    bool is_symmetric() const;

    /// Exact division; nullopt if the divisor does not divide exactly.
    std::optional<LaurentPoly1> divide_exact(const LaurentPoly1& divisor) const;

    /// Canonical printing: monomials by decreasing exponent, e.g.
    /// "t^2 - 1 + t^-2". Round-trips through parse_poly1.
    std::string str() const;

private:
    Map coeffs_;  // no zero values stored
};

/// Two-variable Laurent polynomial on the integer lattice. Houses the
/// shifted two-variable Alexander polynomials (integer exponents only).
class LaurentPoly2 {
public:
    using Key = std::pair<long, long>;
    using Map = std::map<Key, Int>;

    LaurentPoly2() = default;
    static LaurentPoly2 term(long e1, long e2, Int coeff);
    static LaurentPoly2 constant(Int c) { return term(0, 0, std::move(c)); }

    bool is_zero() const { return coeffs_.empty(); }
    const Map& coeffs() const { return coeffs_; }
    Int coeff(long e1, long e2) const;
    void add_term(long e1, long e2, const Int& coeff);

    LaurentPoly2 operator+(const LaurentPoly2& o) const;
    LaurentPoly2 operator-(const LaurentPoly2& o) const;
    LaurentPoly2 operator*(const LaurentPoly2& o) const;
    LaurentPoly2 operator-() const;
    bool operator==(const LaurentPoly2& o) const { return coeffs_ == o.coeffs_; }

    /// Substitution t1 <-> t2.
    LaurentPoly2 vars_swapped() const;

    Int value_at_one() const;

    /// Canonical printing: monomials by decreasing (j1, j2) lexicographic.
    std::string str() const;

private:
    Map coeffs_;
};

}  // namespace knotfill
