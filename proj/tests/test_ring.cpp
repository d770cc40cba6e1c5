#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knotfill/laurent.hpp"
#include "knotfill/parse.hpp"
#include "knotfill/rational.hpp"

using namespace knotfill;

TEST_CASE("rational printing elides unit denominators") {
    CHECK(rat_str(Rat(7)) == "7");
    CHECK(rat_str(Rat(-27, 2)) == "-27/2");
    CHECK(rat_str(Rat(6, 3)) == "2");
}

TEST_CASE("rational parsing") {
    CHECK(rat_parse("27/2") == Rat(27, 2));
    CHECK(rat_parse("-5") == Rat(-5));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("Laurent polynomial arithmetic") {
    LaurentPoly1 a = parse_poly1("t - 1 + t^-1");
    LaurentPoly1 b = parse_poly1("t + 1");
    CHECK(a + b == parse_poly1("2t + t^-1"));
    CHECK(a - a == LaurentPoly1());
    CHECK(a * b == parse_poly1("t^2 + t^-1"));
    CHECK((-a) == parse_poly1("-t + 1 - t^-1"));
    CHECK(a.shifted(2) == parse_poly1("t^3 - t^2 + t"));
    CHECK(a.mirrored() == a);
    CHECK(a.value_at_one() == 1);
    CHECK(a.is_symmetric());
    CHECK_FALSE(b.is_symmetric());
    CHECK(a.low_deg() == -1);
    CHECK(a.high_deg() == 1);
    CHECK_THROWS_AS(LaurentPoly1().low_deg(), std::logic_error);
}

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly1 p;
    p.add_term(3, 5);
    p.add_term(3, -5);
    CHECK(p.is_zero());
    CHECK(p.coeffs().empty());
}

TEST_CASE("exact division") {
    LaurentPoly1 cyc = parse_poly1("t^2 + t + 1");
    LaurentPoly1 q = parse_poly1("t^3 - 2 + t^-2");
    auto back = (q * cyc).divide_exact(cyc);
    REQUIRE(back.has_value());
    CHECK(*back == q);
    CHECK_FALSE(parse_poly1("t + 1").divide_exact(cyc).has_value());
    CHECK_FALSE(parse_poly1("t^2 + 1").divide_exact(parse_poly1("2t + 2")).has_value());
    CHECK_THROWS_AS(q.divide_exact(LaurentPoly1()), std::invalid_argument);
}

TEST_CASE("canonical printing") {
    CHECK(parse_poly1("t^-2 + t^2 - 1").str() == "t^2 - 1 + t^-2");
    CHECK(parse_poly1("3t^2 - 2t").str() == "3*t^2 - 2*t");
    CHECK(LaurentPoly1().str() == "0");
    CHECK(LaurentPoly2::term(1, -1, -1).str() == "-t1*t2^-1");
    CHECK(parse_poly2("t1^2*t2 - t2 + 4").str() == "t1^2*t2 - t2 + 4");
}

TEST_CASE("two-variable polynomials") {
    LaurentPoly2 p = parse_poly2("t1*t2 - t1 + t2^-1");
    CHECK(p.coeff(1, 1) == 1);
    CHECK(p.coeff(0, -1) == 1);
    CHECK(p.vars_swapped() == parse_poly2("t1*t2 - t2 + t1^-1"));
    CHECK(p.value_at_one() == 1);
    CHECK(p * LaurentPoly2::constant(0) == LaurentPoly2());
}

TEST_CASE("parser rejects malformed input with positions") {
    CHECK_THROWS_AS(parse_poly1(""), ParseError);
    CHECK_THROWS_AS(parse_poly1("t^1.5"), ParseError);
    CHECK_THROWS_AS(parse_poly1("t1 + t2"), ParseError);       // two-variable where one expected
    CHECK_THROWS_AS(parse_poly2("t + 1"), ParseError);         // plain t where t1/t2 expected
    CHECK_THROWS_AS(parse_poly1("t + * 2"), ParseError);
    CHECK_THROWS_AS(parse_poly1("t^"), ParseError);            // missing exponent
    CHECK_THROWS_AS(parse_poly2("t1*t2 - t"), ParseError);     // mixing conventions
    try {
        parse_poly1("t^2 + t^3.5");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("non-integer") != std::string::npos);
        CHECK(e.position() > 0);
    }
}

TEST_CASE("parser is whitespace-insensitive") {
    CHECK(parse_poly1("  t ^ 2 -  1 ") == parse_poly1("t^2-1"));
    CHECK(parse_poly2("t1 * t2 + 1") == parse_poly2("t1*t2+1"));
}

TEST_CASE("variant parser picks the variable count") {
    auto one = parse_poly("t^2 - 1");
    CHECK(std::holds_alternative<LaurentPoly1>(one));
    auto two = parse_poly("t1 - t2");
    CHECK(std::holds_alternative<LaurentPoly2>(two));
}

TEST_CASE("braid letter grammar") {
    auto letters = parse_braid_letters("s1^-2 s2 s1^3");
    REQUIRE(letters.size() == 6);
    CHECK(letters[0].index == 1);
    CHECK(letters[0].sign == -1);
    CHECK(letters[2].index == 2);
    CHECK(letters[2].sign == 1);
    CHECK(letters[5].index == 1);
    CHECK(letters[5].sign == 1);
    CHECK_THROWS_AS(parse_braid_letters("x1"), ParseError);
}
