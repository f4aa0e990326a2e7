#include <doctest.h>
#include <sph/real_forms.hpp>

using namespace sph;

namespace {

Mat cm(std::size_t n, std::vector<std::tuple<std::size_t, std::size_t, long, long>> entries) {
    Mat m(n, n);
    for (auto [i, j, re, im] : entries) m(i, j) = GaussRational(rat(re), rat(im));
    return m;
}

LieAlgPtr make_sl2r() {
    std::vector<Mat> b = {
        cm(2, {{0, 0, 1, 0}, {1, 1, -1, 0}}),  // h
        cm(2, {{0, 1, 1, 0}}),                 // e
        cm(2, {{1, 0, 1, 0}}),                 // f
    };
    return std::make_shared<LieAlg>(2, b, "sl2r");
}

LieAlgPtr make_su2() {
    std::vector<Mat> b = {
        cm(2, {{0, 0, 0, 1}, {1, 1, 0, -1}}),
        cm(2, {{0, 1, 1, 0}, {1, 0, -1, 0}}),
        cm(2, {{0, 1, 0, 1}, {1, 0, 0, 1}}),
    };
    return std::make_shared<LieAlg>(2, b, "su2");
}

QVec unit(std::size_t n, std::size_t i) {
    QVec v(n, Rational(0));
    v[i] = 1;
    return v;
}

QMat restrict_gram(const QMat& gram, const Subspace& sub) {
    return sub.basis() * gram * sub.basis().transpose();
}

RealForm build(FamilyTag t, std::vector<int> p) { return construct({t, std::move(p)}); }

} // namespace

TEST_CASE("hand-built sl(2,R)") {
    auto g = make_sl2r();
    CHECK(g->dim() == 3);
    QVec h = unit(3, 0), e = unit(3, 1), f = unit(3, 2);
    QVec he = g->bracket(h, e);
    CHECK(he[1] == 2);
    CHECK(he[0] == 0);
    CHECK(he[2] == 0);
    QVec ef = g->bracket(e, f);
    CHECK(ef[0] == 1);
    CHECK(g->bracket(e, e) == QVec(3, Rational(0)));

    auto bf = g->killing_form();
    REQUIRE(bf.sig.has_value());
    CHECK(*bf.sig == Signature{2, 1, 0});
    // B(h,h) = 8, B(e,f) = 4 for the standard basis
    const QMat& gram = g->killing_gram();
    CHECK(gram(0, 0) == 8);
    CHECK(gram(1, 2) == 4);
    CHECK(gram(1, 1) == 0);
}

TEST_CASE("centralizer of a regular element") {
    auto g = make_sl2r();
    Subspace cart = g->centralizer_elem(unit(3, 0));
    CHECK(cart.dim() == 1);
    CHECK(cart.contains(unit(3, 0)));
    CHECK(g->centralizer(Subspace(3)) == Subspace::full(3));
}

TEST_CASE("hand-built su(2) is compact") {
    auto g = make_su2();
    CHECK(g->dim() == 3);
    auto bf = g->killing_form();
    REQUIRE(bf.sig.has_value());
    CHECK(*bf.sig == Signature{0, 3, 0});
    const QMat& gram = g->killing_gram();
    for (std::size_t i = 0; i < 3; ++i) CHECK(gram(i, i) == -8);
}

TEST_CASE("jacobi and ad-invariance hold for a constructed form") {
    auto rf = build(FamilyTag::su, {1, 2});
    const auto& g = *rf.alg;
    std::size_t d = g.dim();
    const QMat& gram = g.killing_gram();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            QVec x = unit(d, i), y = unit(d, j);
            for (std::size_t k = j + 1; k < d; k += 3) {
                QVec z = unit(d, k);
                QVec s = g.bracket(x, g.bracket(y, z));
                QVec t = g.bracket(y, g.bracket(z, x));
                QVec u = g.bracket(z, g.bracket(x, y));
                for (std::size_t c = 0; c < d; ++c) CHECK(s[c] + t[c] + u[c] == 0);
            }
            // B([x,y], .) + B(y, [x,.]) = 0 columnwise
            QMat adx = g.ad(x);
            QMat lhs = adx.transpose() * gram + gram * adx;
            CHECK(lhs == QMat(d, d));
        }
}

TEST_CASE("closure detection") {
    // e, h alone close; e, f do not
    std::vector<Mat> eh = {cm(2, {{0, 1, 1, 0}}), cm(2, {{0, 0, 1, 0}, {1, 1, -1, 0}})};
    CHECK_NOTHROW(LieAlg(2, eh, "borel"));
    std::vector<Mat> ef = {cm(2, {{0, 1, 1, 0}}), cm(2, {{1, 0, 1, 0}})};
    CHECK_THROWS_AS(LieAlg(2, ef, "open"), NotClosed);
    std::vector<Mat> dep = {cm(2, {{0, 1, 1, 0}}), cm(2, {{0, 1, 2, 0}})};
    CHECK_THROWS_AS(LieAlg(2, dep, "dep"), BadParams);
}

TEST_CASE("subalgebra from generators") {
    auto g = make_sl2r();
    Subalg cart = make_subalg(g, {cm(2, {{0, 0, 1, 0}, {1, 1, -1, 0}})}, "cartan");
    CHECK(cart.dim() == 1);
    CHECK(g->is_subspace_closed(cart.coords));
    Subspace ef = Subspace::span(3, [] {
        QMat m(2, 3);
        m(0, 1) = 1;
        m(1, 2) = 1;
        return m;
    }());
    CHECK_FALSE(g->is_subspace_closed(ef));
}

TEST_CASE("killing orthogonal complement") {
    auto g = make_sl2r();
    Subspace h_line = Subspace::span(3, [] {
        QMat m(1, 3);
        m(0, 0) = 1;
        return m;
    }());
    Subspace perp = g->killing_orthogonal(h_line);
    CHECK(perp.dim() == 2);
    CHECK_FALSE(perp.contains(unit(3, 0)));
    CHECK(perp.contains(unit(3, 1)));
}

TEST_CASE("cartan decomposition sign rules") {
    for (auto rf : {build(FamilyTag::su, {1, 1}), build(FamilyTag::sl_R, {3})}) {
        const auto& g = *rf.alg;
        const auto& par = rf.par;
        CHECK(par.k.dim() + par.s.dim() == g.dim());
        CHECK(subspace_intersect(par.k, par.s).dim() == 0);
        // Killing form definite on each piece
        CHECK(signature(restrict_gram(g.killing_gram(), par.k)) == Signature{0, par.k.dim(), 0});
        CHECK(signature(restrict_gram(g.killing_gram(), par.s)) == Signature{par.s.dim(), 0, 0});
        // theta is a killing isometry
        const QMat& gram = g.killing_gram();
        CHECK(par.theta.transpose() * gram * par.theta == gram);
    }
}

TEST_CASE("su family") {
    auto rf = build(FamilyTag::su, {1, 1});
    CHECK(rf.dim() == 3);
    CHECK(rf.real_rank() == 1);

    auto su12 = build(FamilyTag::su, {1, 2});
    CHECK(su12.dim() == 8);
    CHECK(su12.real_rank() == 1);
    CHECK(su12.par.n.dim() == 3);
    CHECK(su12.par.m.dim() == 1);
    CHECK(su12.par.roots.size() == 4);  // BC1: +-alpha, +-2alpha
    CHECK(su12.par.quasi_split);

    auto su22 = build(FamilyTag::su, {2, 2});
    CHECK(su22.dim() == 15);
    CHECK(su22.real_rank() == 2);
    CHECK(su22.par.n.dim() == 6);
    CHECK(su22.par.quasi_split);

    auto su13 = build(FamilyTag::su, {1, 3});
    CHECK(su13.real_rank() == 1);
    CHECK_FALSE(su13.par.quasi_split);

    CHECK_THROWS_AS(build(FamilyTag::su, {0, 1}), BadParams);
}

TEST_CASE("sl families") {
    auto sl3 = build(FamilyTag::sl_R, {3});
    CHECK(sl3.dim() == 8);
    CHECK(sl3.real_rank() == 2);
    CHECK(sl3.par.n.dim() == 3);
    CHECK(sl3.par.m.dim() == 0);
    CHECK(sl3.par.quasi_split);

    auto sl2h = build(FamilyTag::sl_H, {2});
    CHECK(sl2h.dim() == 15);
    CHECK(sl2h.real_rank() == 1);
    CHECK(sl2h.par.n.dim() == 4);
    CHECK(sl2h.par.m.dim() == 6);
    CHECK_FALSE(sl2h.par.quasi_split);
}

TEST_CASE("so families") {
    auto so23 = build(FamilyTag::so, {2, 3});
    CHECK(so23.dim() == 10);
    CHECK(so23.real_rank() == 2);
    CHECK(so23.par.n.dim() == 4);
    CHECK(so23.par.quasi_split);

    auto so14 = build(FamilyTag::so, {1, 4});
    CHECK(so14.dim() == 10);
    CHECK(so14.real_rank() == 1);
    CHECK(so14.par.n.dim() == 3);
    CHECK_FALSE(so14.par.quasi_split);

    auto so24 = build(FamilyTag::so, {2, 4});
    CHECK(so24.par.quasi_split);

    auto sos8 = build(FamilyTag::so_star, {8});
    CHECK(sos8.dim() == 28);
    CHECK(sos8.real_rank() == 2);
    CHECK(sos8.par.n.dim() == 10);
}

TEST_CASE("sp families") {
    auto sp2r = build(FamilyTag::sp_R, {2});
    CHECK(sp2r.dim() == 10);
    CHECK(sp2r.real_rank() == 2);
    CHECK(sp2r.par.n.dim() == 4);
    CHECK(sp2r.par.quasi_split);

    auto sp11 = build(FamilyTag::sp_pq, {1, 1});
    CHECK(sp11.dim() == 10);
    CHECK(sp11.real_rank() == 1);
    CHECK(sp11.par.k.dim() == 6);
    CHECK(sp11.par.s.dim() == 4);
    CHECK(sp11.par.n.dim() == 3);
    CHECK_FALSE(sp11.par.quasi_split);
}

TEST_CASE("compact families") {
    for (auto rf : {build(FamilyTag::su_compact, {2}), build(FamilyTag::so_compact, {3}),
                    build(FamilyTag::sp_compact, {1})}) {
        CHECK(rf.dim() == 3);
        CHECK(rf.real_rank() == 0);
        CHECK(rf.par.n.dim() == 0);
        auto bf = rf.alg->killing_form();
        REQUIRE(bf.sig.has_value());
        CHECK(bf.sig->pos == 0);
        CHECK(bf.sig->zero == 0);
    }
    CHECK(build(FamilyTag::so_compact, {5}).dim() == 10);
    CHECK(build(FamilyTag::sp_compact, {2}).dim() == 10);
}

TEST_CASE("complex families as real algebras") {
    auto sl2c = build(FamilyTag::complex_sl, {2});
    CHECK(sl2c.dim() == 6);
    CHECK(sl2c.real_rank() == 1);
    CHECK(sl2c.par.n.dim() == 2);
    CHECK(sl2c.par.quasi_split);

    auto so4c = build(FamilyTag::complex_so, {4});
    CHECK(so4c.dim() == 12);
    CHECK(so4c.real_rank() == 2);

    auto sp2c = build(FamilyTag::complex_sp, {2});
    CHECK(sp2c.dim() == 20);
    CHECK(sp2c.real_rank() == 2);
    CHECK(sp2c.par.n.dim() == 8);
    CHECK(sp2c.par.quasi_split);
}

TEST_CASE("parabolic layer invariants") {
    for (auto rf : {build(FamilyTag::su, {1, 2}), build(FamilyTag::so, {2, 3}),
                    build(FamilyTag::sp_pq, {1, 1}), build(FamilyTag::so_star, {6})}) {
        INFO(rf.family.str());
        const auto& par = rf.par;
        const auto& g = *rf.alg;
        CHECK(par.n.dim() == par.nbar.dim());
        CHECK(par.n.dim() == par.s.dim() - par.a.dim());
        CHECK(par.m.dim() == par.k.dim() - par.n.dim());
        CHECK(par.p.dim() == par.m.dim() + par.a.dim() + par.n.dim());
        CHECK(subspace_sum(par.p, par.nbar) == Subspace::full(g.dim()));
        CHECK(par.s.contains(par.a));
        CHECK(par.k.contains(par.m));
        CHECK(g.is_subspace_closed(par.n));
        CHECK(g.is_subspace_closed(par.p));
        CHECK(g.is_subspace_closed(par.m));
        // m is the centralizer of a inside k
        CHECK(par.m == subspace_intersect(g.centralizer(par.a), par.k));
        std::size_t pos = 0;
        for (const auto& r : par.roots)
            if (r.positive()) pos += r.space.dim();
        CHECK(pos == par.n.dim());
    }
}

TEST_CASE("defining form invariance") {
    auto rf = build(FamilyTag::su, {1, 2});
    REQUIRE(rf.form.has_value());
    const Mat& J = rf.form->matrix;
    Mat T = split_to_diag_basis(1, 2);
    CHECK(signature(ctranspose(T) * J * T) == Signature{2, 1, 0});
    for (std::size_t i = 0; i < rf.dim(); ++i) {
        const Mat& X = rf.alg->basis_mat(i);
        CHECK(ctranspose(X) * J + J * X == Mat(3, 3));
    }
}

TEST_CASE("complexify as real") {
    auto su2 = build(FamilyTag::su_compact, {2});
    auto c = complexify_as_real(su2);
    CHECK(c.dim() == 6);
    CHECK(c.complexified);
    CHECK_THROWS_AS(complexify_as_real(c), BadParams);
    CHECK_THROWS_AS(complexify_as_real(build(FamilyTag::complex_sl, {2})), BadParams);
}
