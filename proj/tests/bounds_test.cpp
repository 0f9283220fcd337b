#include <doctest.h>

#include <cmath>

#include "polwalk/bounds.hpp"
#include "polwalk/constructions.hpp"
#include "polwalk/errors.hpp"
#include "test_support.hpp"

using namespace polwalk;
using namespace polwalk::testing;

TEST_CASE("b(g) at the pinned points") {
    CHECK(bound_b_display(0) == doctest::Approx(2.0));
    CHECK(bound_b_display(4) == doctest::Approx(6.0));
    CHECK(bound_b_holds(Rat(6), 4));
    CHECK_FALSE(bound_b_holds(Rat(49, 8), 4));
    // compare(50/8, 5): (42/8)^2 = 27.5625 <= 31.
    CHECK(bound_b_holds(Rat(50, 8), 5));
    CHECK(bound_b_holds(Rat(2), 0));
    CHECK_FALSE(bound_b_holds(Rat(201, 100), 0));
}

TEST_CASE("b_r at the pinned genera") {
    auto br1 = bound_br(1);
    CHECK(br1.value == Rat(18, 5));
    CHECK(br1.terms[0] == Rat(3));
    CHECK(br1.terms[1] == Rat(2));
    CHECK(br1.terms[2] == Rat(10, 3));
    CHECK(br1.terms[3] == Rat(18, 5));
    CHECK(bound_br(2).value == Rat(13, 3));
    CHECK(bound_br(3).value == Rat(36, 7));
    CHECK(bound_br(4).value == Rat(6));
    CHECK(bound_br(5).value == Rat(25, 4));

    // g = 6 = 6k^2: both even-parity terms attain the maximum 7.
    auto br6 = bound_br(6);
    CHECK(br6.value == Rat(7));
    CHECK(br6.attained[0]);
    CHECK(br6.attained[2]);
    CHECK_FALSE(br6.attained[1]);
    CHECK_FALSE(br6.attained[3]);
}

TEST_CASE("b_r stays below b, above the star bound, and is monotone") {
    Rat prev(0);
    for (long long g = 1; g <= 10000; ++g) {
        auto br = bound_br(g);
        CHECK(bound_b_holds(br.value, g));
        CHECK(lower_bound_valence(g) <= br.value);
        CHECK(prev <= br.value);
        prev = br.value;
    }
}

TEST_CASE("homotopic caps") {
    CHECK(homotopic_bound(1, 3).edge_cap == 9);
    CHECK(homotopic_bound(1, 7).edge_cap == 21);
    CHECK(homotopic_bound(3, 2).edge_cap == 9);
    CHECK(homotopic_bound(3, 2).valence_cap == Rat(6));
    CHECK(homotopic_bound(2, 1).edge_cap == 4);
    CHECK_THROWS_AS(homotopic_bound(0, 1), input_error);
}

TEST_CASE("star lower bound") {
    CHECK(lower_bound_valence(1) == Rat(3));
    CHECK(lower_bound_valence(4) == Rat(48, 13));
    for (long long g = 1; g <= 10000; ++g) CHECK(lower_bound_valence(g) < Rat(4));
}

TEST_CASE("audit saturations") {
    // Diamond is saturated by the K7 polarization: 6 = 3 + (24-4+1)/7.
    auto k7 = graph_stats(ks_polarization(7));
    auto rep = audit_bounds(k7);
    CHECK(rep.diamond.applicable);
    CHECK(rep.diamond.ok);
    CHECK(rep.diamond.slack == Rat(0));
    CHECK(rep.spade.ok);

    // club_r on the genus-5 optimum: 50/8 <= 7 with slack 3/4.
    auto g5 = graph_stats(genus_optimal(5));
    auto rep5 = audit_bounds(g5);
    CHECK(rep5.club_r.ok);
    CHECK(rep5.club_r.slack == Rat(3, 4));

    // Heart is saturated by the planar triangle: 2 <= 1 + 3/3.
    auto tri = graph_stats(triangle());
    auto rept = audit_bounds(tri);
    CHECK(rept.heart.applicable);
    CHECK(rept.heart.slack == Rat(0));
    CHECK(rept.all_applicable_ok());
}

TEST_CASE("audit marks condition-C inequalities as not applicable") {
    auto st = graph_stats(loop_monograph());
    CHECK_FALSE(st.satisfies_C);
    auto rep = audit_bounds(st);
    CHECK_FALSE(rep.heart.applicable);
    CHECK_FALSE(rep.diamond.applicable);
    CHECK(rep.club_r.applicable);
}

TEST_CASE("appendix invariants") {
    auto a0 = appendix_bounds(0);
    CHECK(a0.B == 0);
    CHECK(a0.C == 0);
    CHECK(a0.C2 == 1);
    auto a1 = appendix_bounds(1);
    CHECK(a1.B == 1);
    CHECK(a1.C == 3);
    CHECK(a1.C2 == 4);
    auto a2 = appendix_bounds(2);
    CHECK(a2.B == 3);
    CHECK(a2.C == 9);
    CHECK(a2.C2 == 10);
}
