#include "knotfill/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace knotfill {

ParseError::ParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    Int integer() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        if (pos_ < s_.size() && s_[pos_] == '.') fail("non-integer value");
        Int v(s_.substr(start, pos_ - start));
        return neg ? Int(-v) : v;
    }

    long int_exponent() {
        Int v = integer();
        if (v > 1'000'000 || v < -1'000'000) fail("exponent out of range");
        return static_cast<long>(v);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

// Internal normal form while parsing: coefficient * t1^e1 * t2^e2, where a
// one-variable `t` counts as t1 and sets `saw_plain_t`.
struct Monomial {
    Int coeff = 1;
    long e1 = 0, e2 = 0;
};

struct Parsed {
    bool saw_plain_t = false;
    bool saw_indexed_t = false;
    std::vector<Monomial> terms;
};

Parsed parse_terms(const std::string& text) {
    Scanner sc(text);
    Parsed out;
    if (sc.done()) sc.fail("empty polynomial");
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.accept('-')) {
            sign = -1;
        } else if (sc.accept('+')) {
            // explicit plus
        } else if (!first) {
            sc.fail("expected '+' or '-'");
        }
        first = false;

        Monomial m;
        m.coeff = sign;
        bool any_factor = false;
        for (;;) {
            char c = sc.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                m.coeff *= sc.integer();
            } else if (c == 't') {
                sc.accept('t');
                int var = 0;  // 0 = plain t
                if (sc.peek() == '1') {
                    sc.accept('1');
                    var = 1;
                } else if (sc.peek() == '2') {
                    sc.accept('2');
                    var = 2;
                }
                long exp = 1;
                if (sc.accept('^')) exp = sc.int_exponent();
                if (var == 0) {
                    out.saw_plain_t = true;
                    m.e1 += exp;
                } else {
                    out.saw_indexed_t = true;
                    (var == 1 ? m.e1 : m.e2) += exp;
                }
            } else {
                sc.fail("expected coefficient or variable");
            }
            any_factor = true;
            if (sc.accept('*')) continue;
            if (sc.peek() != 't') break;  // juxtaposition: "2t^3"
        }
        if (!any_factor) sc.fail("empty term");
        out.terms.push_back(m);
    }
    if (out.saw_plain_t && out.saw_indexed_t)
        throw ParseError("cannot mix 't' with 't1'/'t2'", 0);
    return out;
}

}  // namespace

LaurentPoly1 parse_poly1(const std::string& text) {
    Parsed p = parse_terms(text);
    if (p.saw_indexed_t)
        throw ParseError("two-variable polynomial where one variable expected", 0);
    LaurentPoly1 r;
    for (const auto& m : p.terms) r.add_term(m.e1, m.coeff);
    return r;
}

LaurentPoly2 parse_poly2(const std::string& text) {
    Parsed p = parse_terms(text);
    if (p.saw_plain_t)
        throw ParseError("one-variable polynomial where t1/t2 expected", 0);
    LaurentPoly2 r;
    for (const auto& m : p.terms) r.add_term(m.e1, m.e2, m.coeff);
    return r;
}

std::variant<LaurentPoly1, LaurentPoly2> parse_poly(const std::string& text) {
    Parsed p = parse_terms(text);
    if (p.saw_indexed_t) {
        LaurentPoly2 r;
        for (const auto& m : p.terms) r.add_term(m.e1, m.e2, m.coeff);
        return r;
    }
    LaurentPoly1 r;
    for (const auto& m : p.terms) r.add_term(m.e1, m.coeff);
    return r;
}

std::vector<BraidLetter> parse_braid_letters(const std::string& text) {
    Scanner sc(text);
    std::vector<BraidLetter> letters;
    while (!sc.done()) {
        if (!sc.accept('s')) sc.fail("expected generator 's<i>'");
        Int idx = sc.integer();
        if (idx < 1 || idx > 1000) sc.fail("generator index out of range");
        long exp = 1;
        if (sc.accept('^')) exp = sc.int_exponent();
        int sign = exp >= 0 ? 1 : -1;
        for (long k = 0; k < (exp >= 0 ? exp : -exp); ++k)
            letters.push_back({static_cast<int>(idx), sign});
    }
    return letters;
}

}  // namespace knotfill
