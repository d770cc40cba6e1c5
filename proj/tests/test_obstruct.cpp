#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knotfill/catalog.hpp"
#include "knotfill/floer.hpp"
#include "knotfill/obstruct.hpp"

using namespace knotfill;

TEST_CASE("square-free decomposition") {
    SquareFreeDecomposition d24 = square_free_decompose(24);
    CHECK(d24.z == 6);
    CHECK(d24.w == 2);
    SquareFreeDecomposition d9 = square_free_decompose(9);
    CHECK(d9.z == 1);
    CHECK(d9.w == 3);
    SquareFreeDecomposition d13 = square_free_decompose(13);
    CHECK(d13.z == 13);
    CHECK(d13.w == 1);
    CHECK(square_free_decompose(1).z == 1);
    CHECK_THROWS_AS(square_free_decompose(0), std::invalid_argument);
}

TEST_CASE("negative-definiteness thresholds") {
    OwensStrleResult square = owens_strle_test(Rat(-1, 3), 9);
    CHECK(square.threshold == Rat(0));
    CHECK(square.obstructed);
    CHECK_FALSE(square.via_nonsquare);

    OwensStrleResult even = owens_strle_test(Rat(-1, 3), 24);
    CHECK(even.threshold == Rat(1, 4));
    CHECK(even.obstructed);
    CHECK(even.via_nonsquare);

    CHECK_FALSE(owens_strle_test(Rat(1, 2), 24).obstructed);
    CHECK_FALSE(owens_strle_test(Rat(1, 2), 9).obstructed);

    // z = 3 odd: threshold (1 - 1/3)/4 = 1/6
    OwensStrleResult z3 = owens_strle_test(Rat(0), 12);
    CHECK(z3.threshold == Rat(1, 6));
    CHECK(z3.obstructed);
}

TEST_CASE("downward slope extension") {
    SlopeInterval a = extend_downward(Rat(10), Rat(9));
    CHECK(a.lo == Rat(9));
    CHECK(a.hi == Rat(10));
    CHECK_FALSE(a.empty());

    SlopeInterval b = extend_downward(Rat(8), Rat(7));
    CHECK(b.lo == Rat(7));
    CHECK(b.hi == Rat(8));

    CHECK(extend_downward(Rat(5), Rat(6)).empty());
    CHECK_THROWS_AS(extend_downward(Rat(0), Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(extend_downward(Rat(-3), Rat(1)), std::invalid_argument);
}

TEST_CASE("(2g-1) criterion index sequence") {
    TorsionCoefficients big;
    big.genus = 5;
    big.values = {9, 9, 9, 9, 9, 0};
    CriterionResult r = criterion_2g_minus_1(5, big);
    CHECK(r.i_sequence == std::vector<long>{4, 1, 0});
    CHECK(r.holds);

    TorsionCoefficients small;
    small.genus = 5;
    small.values = {1, 1, 1, 1, 1, 0};
    CHECK_FALSE(criterion_2g_minus_1(5, small).holds);
    CHECK_THROWS_AS(criterion_2g_minus_1(0, big), std::invalid_argument);
}

TEST_CASE("slope window printing and overlap") {
    SlopeWindow closed{Rat(9), Rat(10), true, true, "[Thm 1.1]"};
    CHECK(closed.str() == "[9, 10]");
    SlopeWindow below{std::nullopt, Rat(9), false, false, "[§1]"};
    CHECK(below.str() == "(-inf, 9)");
    SlopeWindow above{Rat(13), std::nullopt, true, false, "[Thm 1.8]"};
    CHECK(above.str() == "[13, inf)");

    CHECK_FALSE(below.overlaps(closed));   // open at 9 meets closed at 9
    CHECK_FALSE(closed.overlaps(above));
    SlopeWindow clash{Rat(10), Rat(11), true, true, ""};
    CHECK(closed.overlaps(clash));  // both closed at 10
}

TEST_CASE("knot verdicts") {
    FillabilityReport knm31 = verdict(KnotFamily::knm(3, 1));
    REQUIRE(knm31.nonfillable.size() == 1);
    CHECK(knm31.nonfillable[0].str() == "[9, 10]");
    REQUIRE(knm31.stein.size() == 2);
    CHECK(knm31.stein[0].str() == "(-inf, 9)");
    CHECK(knm31.stein[1].str() == "[13, inf)");
    REQUIRE(knm31.unknown.size() == 1);
    CHECK(knm31.unknown[0].str() == "(10, 13)");
    CHECK(knm31.test_slope == 10);
    CHECK(knm31.obstruction.has_value());
    CHECK(knm31.obstruction->obstructed);

    FillabilityReport neg = verdict(KnotFamily::neg_torus(5, 3));
    CHECK(neg.nonfillable.empty());
    CHECK(neg.unknown.empty());
    CHECK_FALSE(neg.notes.empty());

    FillabilityReport unk = verdict(KnotFamily::unknot());
    CHECK(unk.nonfillable.empty());
    CHECK(unk.unknown.empty());
}

TEST_CASE("verdict windows never overlap") {
    std::vector<KnotFamily> subjects = {
        KnotFamily::knm(3, 1),   KnotFamily::kpnm(4, 2), KnotFamily::torus(5, 3),
        KnotFamily::unknot(),    KnotFamily::neg_torus(3, 2),
        KnotFamily::sum({KnotFamily::torus(3, 2), KnotFamily::torus(5, 2)})};
    for (const auto& k : subjects) {
        FillabilityReport rep = verdict(k);
        std::vector<SlopeWindow> all = rep.nonfillable;
        all.insert(all.end(), rep.stein.begin(), rep.stein.end());
        all.insert(all.end(), rep.unknown.begin(), rep.unknown.end());
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i].overlaps(all[j]));
        for (const auto& w : rep.nonfillable) CHECK_FALSE(w.citation.empty());
        for (const auto& w : rep.stein) CHECK_FALSE(w.citation.empty());
    }
}

TEST_CASE("link verdicts") {
    FillabilityReport case1 = verdict(LinkFamily::ln(2), 4, 5);
    CHECK(case1.link_verdict == "nonfillable");
    CHECK(*case1.max_d < 0);

    FillabilityReport case3 = verdict(LinkFamily::ln(2), 2, 6);
    CHECK(case3.link_verdict == "nonfillable");
    CHECK(case3.obstruction->via_nonsquare);

    // n + 1 a square: hypothesis of case 3 fails
    FillabilityReport square = verdict(LinkFamily::ln(3), 2, 8);
    CHECK(square.link_verdict.empty());
    bool saw_note = false;
    for (const auto& n : square.notes)
        saw_note = saw_note || n.find("criterion inapplicable") != std::string::npos;
    CHECK(saw_note);

    FillabilityReport k55 = verdict(LinkFamily::two_bridge(5, 5), 3, 3);
    CHECK(k55.link_verdict == "nonfillable");
    CHECK(*k55.max_d == Rat(-1, 3));

    // outside the recorded L-space region: inconclusive
    FillabilityReport off = verdict(LinkFamily::ln(2), 4, 4);
    CHECK(off.link_verdict.empty());

    CHECK_THROWS_AS(verdict(LinkFamily::ln(2), 0, 5), std::invalid_argument);
}

TEST_CASE("report serialization") {
    FillabilityReport rep = verdict(KnotFamily::knm(3, 1));
    std::string text = rep.text();
    CHECK(text.find("nonfillable: [9, 10]") != std::string::npos);
    CHECK(text.find("[Thm 1.1]") != std::string::npos);
    std::string j = rep.json();
    CHECK(j.find("\"subject\":\"knm:3,1\"") != std::string::npos);
    CHECK(j.find("\"interval\":\"[9, 10]\"") != std::string::npos);
    CHECK(j.find("\"max_d\":\"-1/4\"") != std::string::npos);

    std::string lj = verdict(LinkFamily::ln(2), 2, 6).json();
    CHECK(lj.find("\"verdict\":\"nonfillable\"") != std::string::npos);
    CHECK(lj.find("\"p2\":6") != std::string::npos);
}
