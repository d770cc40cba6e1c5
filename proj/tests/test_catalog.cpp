#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knotfill/catalog.hpp"
#include "knotfill/parse.hpp"

using namespace knotfill;

TEST_CASE("closed forms at small parameters") {
    CHECK(alexander_closed_form(KnotFamily::knm(2, 1)) ==
          parse_poly1("t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4"));
    CHECK(alexander_closed_form(KnotFamily::torus(3, 2)) == parse_poly1("t - 1 + t^-1"));
    CHECK(alexander_closed_form(KnotFamily::unknot()) == parse_poly1("1"));
    KnotFamily sq = KnotFamily::sum({KnotFamily::torus(3, 2), KnotFamily::torus(3, 2)});
    LaurentPoly1 trefoil = parse_poly1("t - 1 + t^-1");
    CHECK(alexander_closed_form(sq) == trefoil * trefoil);
}

TEST_CASE("twisted families at n = 2 are torus knots") {
    for (int m = 1; m <= 4; ++m) {
        CHECK(alexander_closed_form(KnotFamily::knm(2, m)) ==
              alexander_closed_form(KnotFamily::torus(3 * m + 2, 3)));
        CHECK(alexander_closed_form(KnotFamily::kpnm(2, m)) ==
              alexander_closed_form(KnotFamily::torus(3 * m + 1, 3)));
    }
}

TEST_CASE("negative torus knots share the symmetrized polynomial") {
    CHECK(alexander_closed_form(KnotFamily::neg_torus(5, 3)) ==
          alexander_closed_form(KnotFamily::torus(5, 3)));
}

TEST_CASE("family metadata") {
    KnotMetadata knm31 = family_metadata(KnotFamily::knm(3, 1));
    CHECK(knm31.genus == 5);
    CHECK(knm31.tb == 9);
    CHECK(knm31.lspace_floor == 9);
    CHECK(knm31.stein_threshold == 13);

    KnotMetadata kp21 = family_metadata(KnotFamily::kpnm(2, 1));
    CHECK(kp21.genus == 3);
    CHECK(kp21.tb == 5);
    CHECK(kp21.lspace_floor == 5);
    CHECK(kp21.stein_threshold == 13);

    KnotMetadata t35 = family_metadata(KnotFamily::torus(5, 3));
    CHECK(t35.genus == 4);
    CHECK(t35.tb == 7);
    CHECK(t35.lspace_floor == 7);
    CHECK_FALSE(t35.stein_threshold.has_value());

    KnotMetadata neg = family_metadata(KnotFamily::neg_torus(5, 3));
    CHECK(neg.tb == -15);
    CHECK_FALSE(neg.lspace_floor.has_value());

    // genus and TB add, with a +1 per extra summand; no L-space floor
    KnotMetadata sum =
        family_metadata(KnotFamily::sum({KnotFamily::torus(3, 2), KnotFamily::torus(5, 2)}));
    CHECK(sum.genus == 3);
    CHECK(sum.tb == 1 + 3 + 1);
    CHECK_FALSE(sum.lspace_floor.has_value());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(KnotFamily::knm(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(KnotFamily::knm(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(KnotFamily::torus(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(KnotFamily::torus(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(KnotFamily::sum({KnotFamily::torus(3, 2)}), std::invalid_argument);
}

TEST_CASE("subject strings") {
    CHECK(parse_knot_subject("knm:3,1").name() == "knm:3,1");
    CHECK(parse_knot_subject("kpnm:4,2").name() == "kpnm:4,2");
    CHECK(parse_knot_subject("torus:3,5").name() == "torus:5,3");
    CHECK(parse_knot_subject("unknot").tag == KnotTag::Unknot);
    CHECK(parse_knot_subject("torus:unknot").tag == KnotTag::Unknot);
    CHECK(parse_knot_subject("sum:torus:2,3+torus:2,5").summands.size() == 2);

    // P(-2,3,2n+1) is an alias of knm:n,1
    KnotFamily p7 = parse_knot_subject("pretzel:-2,3,7");
    CHECK(p7.tag == KnotTag::Knm);
    CHECK(p7.a == 3);
    CHECK(p7.b == 1);

    CHECK_THROWS_AS(parse_knot_subject("nope:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot_subject("pretzel:-3,3,7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot_subject("knm:x,y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot_subject("sum:torus:2,3+"), std::invalid_argument);

    CHECK(is_link_subject("Ln:2"));
    CHECK(is_link_subject("k2b:5,5"));
    CHECK_FALSE(is_link_subject("knm:3,1"));
    CHECK(parse_link_subject("Ln:2").n == 2);
    CHECK(parse_link_subject("unlink").tag == LinkTag::Unlink);
    CHECK_THROWS_AS(parse_link_subject("Ln:x"), std::invalid_argument);
}

TEST_CASE("Ln closed form, recursion, and components") {
    // Delta~(L_1) = -(t1 - 1)(t2^2 - t2 + 1 - t2^-1)
    CHECK(ln_delta_tilde_closed_form(1) ==
          (LaurentPoly2::constant(1) - LaurentPoly2::term(1, 0, 1)) *
              parse_poly2("t2^2 - t2 + 1 - t2^-1"));

    // Whitehead base case: nabla(L_0) = -(t1 - t1^-1)(t2 - t2^-1)
    CHECK(ln_conway_potential(0) ==
          -(parse_poly2("t1 - t1^-1") * parse_poly2("t2 - t2^-1")));
    for (int n = 0; n <= 8; ++n)
        CHECK(ln_delta_tilde_closed_form(n) == ln_delta_tilde_by_recursion(n));

    LinkFamily l2 = LinkFamily::ln(2);
    CHECK(l2.comp1_num == parse_poly1("1"));
    CHECK(l2.comp2_num == parse_poly1("t^2 - t + 1 - t^-1 + t^-2"));
    CHECK(l2.linking_number == 0);
}

TEST_CASE("Ln L-space surgery region") {
    LinkFamily l2 = LinkFamily::ln(2);
    CHECK(l2.lspace_known(1, 5));
    CHECK(l2.lspace_known(4, 7));
    CHECK_FALSE(l2.lspace_known(4, 4));
}

TEST_CASE("two-bridge catalog entry") {
    LinkFamily k55 = LinkFamily::two_bridge(5, 5);
    CHECK(k55.delta_tilde == k55.delta_tilde.vars_swapped());
    CHECK(k55.delta_tilde.coeff(1, 1) == 1);
    CHECK(k55.delta_tilde.coeff(0, 2) == 1);
    CHECK(k55.comp1_num == parse_poly1("1"));
    CHECK(k55.lspace_known(3, 3));
    CHECK_FALSE(k55.lspace_known(3, 4));
    CHECK_THROWS_AS(LinkFamily::two_bridge(3, 3), std::invalid_argument);
}
