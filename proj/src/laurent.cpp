#include "knotfill/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace knotfill {

namespace {

// Shared term formatting. `vars` is "" (constant), "t", "t^3", "t1*t2^-1", ...
void append_term(std::ostringstream& out, bool first, const Int& coeff, const std::string& vars) {
    Int mag = coeff < 0 ? Int(-coeff) : coeff;
    if (first) {
        if (coeff < 0) out << "-";
    } else {
        out << (coeff < 0 ? " - " : " + ");
    }
    if (vars.empty()) {
        out << mag.str();
    } else if (mag == 1) {
        out << vars;
    } else {
        out << mag.str() << "*" << vars;
    }
}

std::string var_str(const std::string& name, long exp) {
    if (exp == 0) return "";
    if (exp == 1) return name;
    return name + "^" + std::to_string(exp);
}

}  // namespace

LaurentPoly1 LaurentPoly1::term(long exp, Int coeff) {
    LaurentPoly1 p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
}

Int LaurentPoly1::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPoly1::add_term(long exp, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

long LaurentPoly1::low_deg() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly1::high_deg() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly1 LaurentPoly1::operator+(const LaurentPoly1& o) const {
    LaurentPoly1 r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly1 LaurentPoly1::operator-(const LaurentPoly1& o) const {
    LaurentPoly1 r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
    return r;
}

LaurentPoly1 LaurentPoly1::operator*(const LaurentPoly1& o) const {
    LaurentPoly1 r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly1 LaurentPoly1::operator-() const {
    LaurentPoly1 r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly1 LaurentPoly1::shifted(long k) const {
    LaurentPoly1 r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

LaurentPoly1 LaurentPoly1::mirrored() const {
    LaurentPoly1 r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

Int LaurentPoly1::value_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

bool LaurentPoly1::is_symmetric() const {
    for (const auto& [e, c] : coeffs_)
        if (coeff(-e) != c) return false;
    return true;
}

std::optional<LaurentPoly1> LaurentPoly1::divide_exact(const LaurentPoly1& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return LaurentPoly1();

    // Shift both to ordinary polynomials and long-divide from the top.
    long lo_n = low_deg(), lo_d = divisor.low_deg();
    long deg_n = high_deg() - lo_n, deg_d = divisor.high_deg() - lo_d;
    if (deg_n < deg_d) return std::nullopt;

    std::vector<Int> num(static_cast<size_t>(deg_n) + 1, Int(0));
    std::vector<Int> den(static_cast<size_t>(deg_d) + 1, Int(0));
    for (const auto& [e, c] : coeffs_) num[static_cast<size_t>(e - lo_n)] = c;
    for (const auto& [e, c] : divisor.coeffs_) den[static_cast<size_t>(e - lo_d)] = c;

    const Int& lead = den.back();
    std::vector<Int> quot(static_cast<size_t>(deg_n - deg_d) + 1, Int(0));
    for (long k = deg_n - deg_d; k >= 0; --k) {
        Int top = num[static_cast<size_t>(k + deg_d)];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Int q = top / lead;
        quot[static_cast<size_t>(k)] = q;
        for (long j = 0; j <= deg_d; ++j)
            num[static_cast<size_t>(k + j)] -= q * den[static_cast<size_t>(j)];
    }
    for (const Int& c : num)
        if (c != 0) return std::nullopt;

    LaurentPoly1 r;
    for (size_t k = 0; k < quot.size(); ++k)
        if (quot[k] != 0) r.coeffs_[static_cast<long>(k) + lo_n - lo_d] = quot[k];
    return r;
}

std::string LaurentPoly1::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        append_term(out, first, it->second, var_str("t", it->first));
        first = false;
    }
    return out.str();
}

LaurentPoly2 LaurentPoly2::term(long e1, long e2, Int coeff) {
    LaurentPoly2 p;
    if (coeff != 0) p.coeffs_[{e1, e2}] = std::move(coeff);
    return p;
}

Int LaurentPoly2::coeff(long e1, long e2) const {
    auto it = coeffs_.find({e1, e2});
    return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPoly2::add_term(long e1, long e2, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace({e1, e2}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k.first, k.second, c);
    return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
    LaurentPoly2 r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k.first, k.second, -c);
    return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
    LaurentPoly2 r;
    for (const auto& [k1, c1] : coeffs_)
        for (const auto& [k2, c2] : o.coeffs_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
    return r;
}

LaurentPoly2 LaurentPoly2::vars_swapped() const {
    LaurentPoly2 r;
    for (const auto& [k, c] : coeffs_) r.coeffs_[{k.second, k.first}] = c;
    return r;
}

Int LaurentPoly2::value_at_one() const {
    Int s = 0;
    for (const auto& [k, c] : coeffs_) s += c;
    return s;
}

std::string LaurentPoly2::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::string v1 = var_str("t1", it->first.first);
        std::string v2 = var_str("t2", it->first.second);
        std::string vars = v1.empty() ? v2 : (v2.empty() ? v1 : v1 + "*" + v2);
        append_term(out, first, it->second, vars);
        first = false;
    }
    return out.str();
}

}  // namespace knotfill
