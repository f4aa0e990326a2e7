#include <doctest.h>
#include <sph/checks.hpp>

using namespace sph;

namespace {

Subalg whole(const RealForm& g) {
    return Subalg{g.alg, Subspace::full(g.dim()), "g"};
}

std::vector<Mat> ad_action(const RealForm& g) {
    std::vector<Mat> act;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        QVec e(g.dim(), Rational(0));
        e[i] = 1;
        act.push_back(to_complex(g.alg->ad(e)));
    }
    return act;
}

} // namespace

TEST_CASE("dimension bound") {
    auto g = construct({FamilyTag::su, {2, 2}});
    Subalg h = block_embed(g, {{FamilyTag::su, {1, 1}}, {FamilyTag::su, {1, 1}}});
    Verdict v = check_dimension_bound(g, h);
    CHECK(v.outcome == Outcome::pass);  // 6 >= 6, boundary
    CHECK(v.numbers["dim_h"] == 6);
    CHECK(v.numbers["dim_n"] == 6);

    Subalg small = block_embed(g, {{FamilyTag::so, {1, 2}}});
    CHECK(check_dimension_bound(g, small).outcome == Outcome::fail);  // 3 < 6

    CHECK(check_dimension_bound(g, whole(g)).outcome == Outcome::pass);
}

TEST_CASE("subalgebra real rank") {
    SampleConfig cfg;
    auto g1 = construct({FamilyTag::su, {2, 2}});
    CHECK(subalg_real_rank(g1, whole(g1), cfg) == 2);
    auto g2 = construct({FamilyTag::sp_pq, {1, 1}});
    CHECK(subalg_real_rank(g2, whole(g2), cfg) == 1);
    auto g3 = construct({FamilyTag::sl_R, {3}});
    CHECK(subalg_real_rank(g3, whole(g3), cfg) == 2);
    // compact subalgebra: rank 0
    Subalg k{g1.alg, g1.par.k, "k"};
    CHECK(subalg_real_rank(g1, k, cfg) == 0);
}

TEST_CASE("rank inequality") {
    SampleConfig cfg;
    auto g = construct({FamilyTag::su, {2, 2}});
    CHECK(check_rank_inequality(g, whole(g), cfg).outcome == Outcome::pass);

    Subalg h = block_embed(g, {{FamilyTag::su, {1, 1}}});
    Verdict v = check_rank_inequality(g, h, cfg, 1);  // constructor-supplied rank
    CHECK(v.outcome == Outcome::pass);
    CHECK(v.numbers["rank_h"] == 1);
    CHECK(check_rank_inequality(g, h, cfg, 3).outcome == Outcome::fail);

    // a nilpotent subalgebra is not theta-stable and carries no rank
    Subalg n{g.alg, g.par.n, "n"};
    CHECK_FALSE(theta_stable(g, n.coords));
    CHECK_THROWS_AS(check_rank_inequality(g, n, cfg), NotThetaStable);
}

TEST_CASE("sphericity verdicts") {
    SampleConfig cfg;

    auto g = construct({FamilyTag::su, {1, 2}});
    Verdict triv = is_spherical(g, whole(g), cfg);
    CHECK(triv.outcome == Outcome::spherical);
    CHECK(triv.witness.has_value());

    // sl(3,H) > sl(3,C)
    auto gh = construct({FamilyTag::sl_H, {3}});
    EmbeddingContext ctx = make_context(gh);
    add_diag_double(ctx, {FamilyTag::complex_sl, {3}});
    Subalg slc = finish(ctx);
    CHECK(slc.dim() == 16);
    Verdict v = is_spherical(gh, slc, cfg, ctx.h_rank);
    CHECK(v.outcome == Outcome::spherical);

    // su(2,2) > su(1,1) + su(1,1): defect exactly 1
    auto g2 = construct({FamilyTag::su, {2, 2}});
    Subalg pair2 = block_embed(g2, {{FamilyTag::su, {1, 1}}, {FamilyTag::su, {1, 1}}});
    Verdict neg = is_spherical(g2, pair2, cfg, 2);
    CHECK(neg.outcome == Outcome::not_spherical_probable);
    CHECK(neg.defect() == 1);

    // so(2,4) > su(1,2) realified
    auto g3 = construct({FamilyTag::so, {2, 4}});
    Subalg h3 = realify_embed(g3, {FamilyTag::su, {1, 2}});
    Verdict pos = is_spherical(g3, h3, cfg, 1);
    CHECK(pos.outcome == Outcome::spherical);
    CHECK(pos.witness.has_value());
}

TEST_CASE("factorizations") {
    SampleConfig cfg;

    // trivial: h = h * anything
    auto g = construct({FamilyTag::su, {1, 1}});
    Subalg all = whole(g);
    Subalg tiny{g.alg, g.par.a, "a"};
    Verdict triv = is_factorization(g.alg, all, tiny, cfg);
    CHECK(triv.outcome == Outcome::factorization);

    // so(7,C) = so(6,C) * G2^C with intersection sl(3,C)
    auto g7 = construct({FamilyTag::complex_so, {7}});
    auto o = octonion_algebra(true);
    Mat p = form_align(to_complex(o.imaginary_gram()), g7);
    Mat pinv = inverse(p);
    std::vector<Mat> gens;
    for (const QMat& der : derivation_matrices(o)) {
        gens.push_back(p * to_complex(der) * pinv);
        gens.push_back(p * (to_complex(der) * gauss_i()) * pinv);
    }
    Subalg g2c = make_subalg(g7.alg, gens, "g2_C");
    CHECK(g2c.dim() == 28);
    Subalg so6 = block_embed(g7, {{FamilyTag::complex_so, {6}}});
    CHECK(so6.dim() == 30);
    Verdict fac = is_factorization(g7.alg, so6, g2c, cfg);
    CHECK(fac.outcome == Outcome::factorization);
    CHECK(fac.numbers["dim_intersection"] == 16);

    // sp(2,C) admits no factorization into proper block candidates
    auto gsp = construct({FamilyTag::complex_sp, {2}});
    EmbeddingContext c1 = make_context(gsp);
    add_block(c1, {FamilyTag::complex_sp, {1}});
    Subalg b1 = finish(c1);
    EmbeddingContext c2 = make_context(gsp);
    add_block(c2, {FamilyTag::complex_sp, {1}});
    add_block(c2, {FamilyTag::complex_sp, {1}});
    Subalg b2 = finish(c2);
    Verdict no = is_factorization(gsp.alg, b2, b1, cfg);
    CHECK(no.outcome == Outcome::no_factorization_probable);
}

TEST_CASE("prehomogeneity") {
    SampleConfig cfg;

    // SO(3,C) on C^3
    auto so3 = construct({FamilyTag::complex_so, {3}});
    RepData std3{so3.alg->basis(), 3, 3, true};
    Verdict v = is_prehomogeneous(std3, cfg);
    CHECK(v.outcome == Outcome::prehomogeneous);
    CHECK(v.numbers["dim_condition"] == 1);

    // SL(2,C) on C^2
    auto sl2 = construct({FamilyTag::complex_sl, {2}});
    RepData std2{sl2.alg->basis(), 2, 3, true};
    CHECK(is_prehomogeneous(std2, cfg).outcome == Outcome::prehomogeneous);

    // a torus alone has no open orbit on C^3
    RepData torus{{so3.alg->basis_mat(0), so3.alg->basis_mat(0) * gauss_i()}, 3, 1, true};
    Verdict neg = is_prehomogeneous(torus, cfg);
    CHECK(neg.outcome == Outcome::not_prehomogeneous_probable);
    CHECK(neg.numbers["dim_condition"] == 0);
}

TEST_CASE("invariant form types") {
    // adjoint representations carry the Killing form
    auto su2 = construct({FamilyTag::su_compact, {2}});
    auto r1 = invariant_form_type({ad_action(su2), 3, 3, false});
    CHECK(r1.type == 1);
    CHECK(r1.sig == Signature{3, 0, 0});

    // spin(7) on R^8: the octonion norm form
    auto o = octonion_algebra(false);
    std::vector<Mat> spin7;
    for (std::size_t i = 1; i <= 7; ++i)
        for (std::size_t j = i + 1; j <= 7; ++j)
            spin7.push_back(to_complex(o.left_mult(i) * o.left_mult(j)));
    auto r2 = invariant_form_type({spin7, 8, 21, false});
    CHECK(r2.type == 1);
    CHECK(r2.sig == Signature{8, 0, 0});

    // symplectic standard representations are type 2
    auto sp2 = construct({FamilyTag::sp_R, {2}});
    CHECK(invariant_form_type({sp2.alg->basis(), 4, 10, false}).type == 2);
    auto sl2c = construct({FamilyTag::complex_sl, {2}});
    CHECK(invariant_form_type({sl2c.alg->basis(), 2, 3, true}).type == 2);

    // so(2,1) standard keeps its defining signature
    auto so21 = construct({FamilyTag::so, {2, 1}});
    auto r3 = invariant_form_type({so21.alg->basis(), 3, 3, false});
    CHECK(r3.type == 1);
    CHECK(r3.sig == Signature{2, 1, 0});

    // su(3) on C^3 has no invariant bilinear form at all
    auto su3 = construct({FamilyTag::su_compact, {3}});
    CHECK(invariant_form_type({su3.alg->basis(), 3, 8, true}).type == 0);
}

TEST_CASE("split block embeddings are theta-stable") {
    auto g1 = construct({FamilyTag::su, {2, 2}});
    Subalg h1 = split_block_embed(g1, {{FamilyTag::su, {1, 1}}, {FamilyTag::su, {1, 1}}});
    CHECK(h1.dim() == 6);
    CHECK(theta_stable(g1, h1.coords));

    Subalg hq = split_block_embed(g1, {{FamilyTag::sp_pq, {1, 1}}});
    CHECK(hq.dim() == 10);
    CHECK(theta_stable(g1, hq.coords));

    auto g2 = construct({FamilyTag::sp_pq, {1, 2}});
    Subalg h2 = split_block_embed(g2, {{FamilyTag::sp_compact, {1}}, {FamilyTag::sp_pq, {1, 1}}});
    CHECK(h2.dim() == 13);
    CHECK(theta_stable(g2, h2.coords));

    auto g3 = construct({FamilyTag::sl_R, {3}});
    Subalg h3 = split_block_embed(g3, {{FamilyTag::so, {1, 2}}});
    CHECK(h3.dim() == 3);
    CHECK(theta_stable(g3, h3.coords));

    auto g4 = construct({FamilyTag::sl_H, {2}});
    Subalg h4 = split_block_embed(g4, {{FamilyTag::sp_pq, {1, 1}}});
    CHECK(h4.dim() == 10);
    CHECK(theta_stable(g4, h4.coords));
}

TEST_CASE("adapted levi for symmetric pairs") {
    SampleConfig cfg;

    // (sl(2,H), sp(1,1)): l cap h = sp(1)^2
    auto g = construct({FamilyTag::sl_H, {2}});
    Subalg h = split_block_embed(g, {{FamilyTag::sp_pq, {1, 1}}});
    AdaptedLevi al = adapted_levi_symmetric(g, h, cfg);
    CHECK(al.l_cap_h.dim() == 6);
    CHECK(al.dim_identity);

    // (su(2,2), sp(1,1)): l cap h = sl(2,C)
    auto g2 = construct({FamilyTag::su, {2, 2}});
    Subalg h2 = split_block_embed(g2, {{FamilyTag::sp_pq, {1, 1}}});
    AdaptedLevi al2 = adapted_levi_symmetric(g2, h2, cfg);
    CHECK(al2.l_cap_h.dim() == 6);
    CHECK(al2.dim_identity);

    // non-symmetric h is rejected
    Subalg n{g2.alg, g2.par.n, "n"};
    CHECK_THROWS_AS(adapted_levi_symmetric(g2, n, cfg), NotSymmetric);
}

TEST_CASE("tower necessary condition") {
    SampleConfig cfg;

    // g = su(1,2), h = s(u(1,1)+u(1)), h' = su(1,1): PASS
    auto g = construct({FamilyTag::su, {1, 2}});
    Subalg hsu = split_block_embed(g, {{FamilyTag::su, {1, 1}}});
    Subalg h = center_piece(g, hsu, CenterKind::u1);
    CHECK(h.dim() == 4);
    CHECK(theta_stable(g, h.coords));
    Verdict pass = tower_check(g, h, hsu, cfg);
    CHECK(pass.outcome == Outcome::pass);

    // h' = h: trivially PASS
    CHECK(tower_check(g, h, h, cfg).outcome == Outcome::pass);

    // g = su(2,2), h = s(u(1,1)+u(1,1)), h' = su(1,1)+su(1,1): FAIL
    auto g2 = construct({FamilyTag::su, {2, 2}});
    Subalg pair2 = split_block_embed(g2, {{FamilyTag::su, {1, 1}}, {FamilyTag::su, {1, 1}}});
    Subalg h2 = center_piece(g2, pair2, CenterKind::u1);
    CHECK(h2.dim() == 7);
    CHECK(theta_stable(g2, h2.coords));
    Verdict fail = tower_check(g2, h2, pair2, cfg);
    CHECK(fail.outcome == Outcome::fail);
}
