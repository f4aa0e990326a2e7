#include <doctest.h>
#include <sph/reps.hpp>

using namespace sph;

TEST_CASE("representation dimensions") {
    auto std8 = standard_rep({FamilyTag::so, {3, 5}});
    CHECK(std8.dim_v == 8);
    CHECK(std8.dim_group == 28);
    CHECK(!std8.over_c);

    auto stdc = standard_rep({FamilyTag::complex_sl, {3}});
    CHECK(stdc.dim_v == 3);
    CHECK(stdc.dim_group == 8);
    CHECK(stdc.over_c);
    CHECK(stdc.action.size() == 16);

    auto ad = adjoint_rep({FamilyTag::complex_sl, {3}});
    CHECK(ad.dim_v == 16);
    CHECK(ad.dim_group == 8);

    CHECK(sym_power_rep({FamilyTag::complex_sl, {2}}, 2).dim_v == 3);
    CHECK(sym_power_rep({FamilyTag::complex_sl, {2}}, 3).dim_v == 4);
    CHECK(sym_power_rep({FamilyTag::complex_sl, {3}}, 2).dim_v == 6);
    CHECK(wedge_power_rep({FamilyTag::complex_sl, {4}}, 2).dim_v == 6);
    CHECK(wedge_power_rep({FamilyTag::complex_sl, {6}}, 3).dim_v == 20);
    CHECK_THROWS_AS(wedge_power_rep({FamilyTag::complex_sl, {4}}, 4), BadParams);

    CHECK(wedge_primitive_rep(2, 2).dim_v == 5);
    CHECK(wedge_primitive_rep(3, 2).dim_v == 14);
    CHECK(wedge_primitive_rep(3, 3).dim_v == 14);
    CHECK(wedge_primitive_rep(3, 3).dim_group == 21);

    auto s7 = spin_rep_c(7);
    CHECK(s7.dim_v == 8);
    CHECK(s7.dim_group == 21);
    CHECK(s7.action.size() == 42);
    auto s9 = spin_rep_c(9);
    CHECK(s9.dim_v == 16);
    CHECK(s9.dim_group == 36);
    CHECK_THROWS_AS(spin_rep_c(8), BadParams);

    auto g2 = g2_rep_c();
    CHECK(g2.dim_v == 7);
    CHECK(g2.dim_group == 14);
    CHECK(g2.action.size() == 28);
}

TEST_CASE("known prehomogeneous spaces") {
    SampleConfig cfg;
    auto preh = [&](const RepData& r) { return is_prehomogeneous(r, cfg).outcome; };

    CHECK(preh(sym_power_rep({FamilyTag::complex_sl, {2}}, 2)) == Outcome::prehomogeneous);
    CHECK(preh(sym_power_rep({FamilyTag::complex_sl, {2}}, 3)) == Outcome::prehomogeneous);
    CHECK(preh(wedge_power_rep({FamilyTag::complex_sl, {5}}, 2)) == Outcome::prehomogeneous);
    CHECK(preh(wedge_primitive_rep(3, 3)) == Outcome::prehomogeneous);
    CHECK(preh(spin_rep_c(7)) == Outcome::prehomogeneous);
    CHECK(preh(g2_rep_c()) == Outcome::prehomogeneous);

    // the adjoint representation has invariant polynomials of positive degree
    CHECK(preh(adjoint_rep({FamilyTag::complex_sl, {3}})) ==
          Outcome::not_prehomogeneous_probable);
}

TEST_CASE("invariant bilinear forms of standard constructions") {
    CHECK(invariant_form_type(sym_power_rep({FamilyTag::complex_sl, {2}}, 2)).type == 1);
    CHECK(invariant_form_type(sym_power_rep({FamilyTag::complex_sl, {2}}, 3)).type == 2);
    CHECK(invariant_form_type(wedge_power_rep({FamilyTag::complex_sl, {5}}, 2)).type == 0);
    CHECK(invariant_form_type(wedge_power_rep({FamilyTag::complex_sl, {4}}, 2)).type == 1);
    CHECK(invariant_form_type(wedge_primitive_rep(3, 3)).type == 2);
    CHECK(invariant_form_type(spin_rep_c(7)).type == 1);
    CHECK(invariant_form_type(spin_rep_c(9)).type == 1);
    CHECK(invariant_form_type(g2_rep_c()).type == 1);
}
