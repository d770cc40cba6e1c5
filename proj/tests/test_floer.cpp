#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knotfill/catalog.hpp"
#include "knotfill/floer.hpp"
#include "knotfill/parse.hpp"

using namespace knotfill;

TEST_CASE("torsion coefficients of simple knots") {
    TorsionCoefficients trefoil = torsion_coefficients(parse_poly1("t - 1 + t^-1"));
    CHECK(trefoil.genus == 1);
    CHECK(trefoil.values == std::vector<Int>{1, 0});
    CHECK(trefoil.at(0) == 1);
    CHECK(trefoil.at(17) == 0);

    TorsionCoefficients unknot = torsion_coefficients(parse_poly1("1"));
    CHECK(unknot.genus == 0);
    CHECK(unknot.at(0) == 0);
}

TEST_CASE("torsion preconditions") {
    CHECK_THROWS_AS(torsion_coefficients(parse_poly1("t + 1")), std::invalid_argument);
    CHECK_THROWS_AS(torsion_coefficients(parse_poly1("t - 3 + t^-1")), std::invalid_argument);
    // symmetric with Delta(1)=1 but not an L-space knot polynomial
    LaurentPoly1 square = parse_poly1("t - 1 + t^-1") * parse_poly1("t^2 - t + 1 - t^-1 + t^-2");
    CHECK_THROWS_AS(torsion_coefficients(square), std::invalid_argument);
}

TEST_CASE("lens space correction terms") {
    CHECK(d_lens(3, 0) == Rat(1, 2));
    CHECK(d_lens(3, 1) == Rat(-1, 6));
    CHECK(d_lens(1, 0) == Rat(0));
    CHECK(d_lens(5, 5) == d_lens(5, 0));
    CHECK_THROWS_AS(d_lens(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(d_lens(0, 0), std::invalid_argument);
}

TEST_CASE("knot surgery d-invariants") {
    LaurentPoly1 trefoil = parse_poly1("t - 1 + t^-1");
    DInvariantTableKnot poincare = d_knot_surgery(trefoil, 1);
    CHECK(poincare.entries == std::vector<Rat>{Rat(-2)});

    // unknot surgeries are lens spaces
    DInvariantTableKnot lens = d_knot_surgery(parse_poly1("1"), 5);
    for (long i = 0; i < 5; ++i) CHECK(lens.at(i) == d_lens(5, std::min(i, 5 - i)));

    LaurentPoly1 t35 = alexander_closed_form(KnotFamily::torus(5, 3));
    DInvariantTableKnot table = d_knot_surgery(t35, 8);
    CHECK(table.at(0) == Rat(-9, 4));
    for (long i = 0; i < 8; ++i) {
        CHECK(table.at(i) < 0);
        CHECK(table.at(i) == table.at((8 - i) % 8));
    }
    CHECK(table.max() == table.at(4));
    CHECK_THROWS_AS(d_knot_surgery(trefoil, 0), std::invalid_argument);
}

TEST_CASE("knot d-table serializes with exact rationals") {
    DInvariantTableKnot table = d_knot_surgery(parse_poly1("t - 1 + t^-1"), 2);
    std::string j = table.json();
    CHECK(j.find("\"p\":2") != std::string::npos);
    CHECK(j.find("\"d\":\"-7/4\"") != std::string::npos);
    CHECK(j.find("\"max\":\"-1/4\"") != std::string::npos);
}

TEST_CASE("h-function of K(5,5)") {
    HFunction hf = h_function(LinkFamily::two_bridge(5, 5));
    CHECK(hf.h(0, 0) == 1);
    CHECK(hf.h(0, 1) == 1);
    CHECK(hf.h(0, -1) == 1);
    CHECK(hf.h(1, 0) == 1);
    CHECK(hf.h(-1, 0) == 1);
    CHECK(hf.h(1, 1) == 0);
    CHECK(hf.h(-3, -3) == 0);
    CHECK(hf.h(10, 10) == 0);
    CHECK(hf.H(-4, 0) == 4);  // unlink part dominates far out
}

TEST_CASE("component tails in closed form") {
    LaurentPoly1 unknot = parse_poly1("1");
    CHECK(HFunction::component_tail(unknot, -3) == 3);
    CHECK(HFunction::component_tail(unknot, 0) == 0);
    LaurentPoly1 trefoil = parse_poly1("t - 1 + t^-1");
    CHECK(HFunction::component_tail(trefoil, -1) == 1);
    CHECK(HFunction::component_tail(trefoil, 0) == 1);
    CHECK(HFunction::component_tail(trefoil, 1) == 0);
}

TEST_CASE("link surgery d-invariants") {
    LinkFamily k55 = LinkFamily::two_bridge(5, 5);
    DInvariantTableLink table = d_link_surgery(k55, 3, 3);
    CHECK(table.at(0, 0) == Rat(-1));
    CHECK(table.at(0, 1) == Rat(-5, 3));
    CHECK(table.at(2, 0) == Rat(-5, 3));
    CHECK(table.at(1, 2) == Rat(-1, 3));
    CHECK(table.max() == Rat(-1, 3));

    std::string j = table.json();
    CHECK(j.find("\"p1\":3") != std::string::npos);
    CHECK(j.find("\"d\":\"-5/3\"") != std::string::npos);
    CHECK(j.find("\"max\":\"-1/3\"") != std::string::npos);

    // the unlink surrogate gives S^3 at (1,1)
    DInvariantTableLink s3 = d_link_surgery(LinkFamily::unlink(), 1, 1);
    CHECK(s3.entries == std::vector<Rat>{Rat(0)});

    CHECK_THROWS_AS(d_link_surgery(k55, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(table.at(3, 0), std::invalid_argument);
}

TEST_CASE("Ln evidence table of Theorem 1.4 case 1") {
    DInvariantTableLink table = d_link_surgery(LinkFamily::ln(2), 4, 5);
    for (long i1 = 0; i1 < 4; ++i1)
        for (long i2 = 0; i2 < 5; ++i2) CHECK(table.at(i1, i2) < 0);
}
