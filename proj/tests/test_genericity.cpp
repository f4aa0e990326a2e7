#include <doctest.h>
#include <sph/genericity.hpp>
#include <sph/real_forms.hpp>

using namespace sph;

namespace {

Mat e12(std::size_t n) {
    Mat m(n, n);
    m(0, 1) = GaussRational(1);
    return m;
}

} // namespace

TEST_CASE("exp_nilpotent") {
    CHECK(exp_nilpotent(Mat(3, 3)) == Mat::identity(3));
    CHECK(exp_nilpotent(e12(2)) == Mat::identity(2) + e12(2));

    SplitMix64 rng(42);
    Mat n(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            n(i, j) = GaussRational(random_rational(rng, 7), random_rational(rng, 7));
    CHECK(exp_nilpotent(n) * exp_nilpotent(-n) == Mat::identity(4));

    CHECK_THROWS_AS(exp_nilpotent(Mat::identity(2)), NotNilpotent);
}

TEST_CASE("ad_conjugate identity and dimension preservation") {
    auto rf = construct({FamilyTag::su, {1, 1}});
    const auto& g = *rf.alg;
    CHECK(ad_conjugate(g, Mat::identity(2), Mat::identity(2), rf.par.p) == rf.par.p);

    SplitMix64 rng(7);
    Mat y = g.from_coords(rf.par.nbar.row(0)) * GaussRational(random_rational(rng, 7));
    Mat x = exp_nilpotent(y);
    Subspace moved = ad_conjugate(g, x, inverse(x), rf.par.p);
    CHECK(moved.dim() == rf.par.p.dim());
    CHECK(moved != rf.par.p);
}

TEST_CASE("generic_sum_rank certificates") {
    auto rf = construct({FamilyTag::su, {1, 1}});
    const auto& g = *rf.alg;
    SampleConfig cfg;

    // fixed = g: full at the first sample
    auto full = generic_sum_rank(g, Subspace::full(3), rf.par.p, rf.par.nbar, cfg);
    CHECK(full.full);
    CHECK(full.samples_used == 1);

    // k + Ad(x)p covers g (Iwasawa)
    auto iwasawa = generic_sum_rank(g, rf.par.k, rf.par.p, rf.par.nbar, cfg);
    CHECK(iwasawa.full);
    CHECK(iwasawa.max_rank == 3);
    // witness re-verifies exactly
    Subspace moved = ad_conjugate(g, iwasawa.witness, inverse(iwasawa.witness), rf.par.p);
    CHECK(rank_exact(subspace_sum(rf.par.k, moved).basis()) == 3);

    // trivial h can never cover: honest defect
    auto defect = generic_sum_rank(g, Subspace(3), rf.par.p, rf.par.nbar, cfg);
    CHECK_FALSE(defect.full);
    CHECK(defect.max_rank == 2);
    CHECK(defect.samples_used == cfg.samples);
}

TEST_CASE("determinism of the sample stream") {
    auto rf = construct({FamilyTag::su, {1, 2}});
    SampleConfig cfg{99, 5, 7};
    auto a = generic_sum_rank(*rf.alg, Subspace(8), rf.par.m, rf.par.nbar, cfg);
    auto b = generic_sum_rank(*rf.alg, Subspace(8), rf.par.m, rf.par.nbar, cfg);
    CHECK(a.max_rank == b.max_rank);
    CHECK(a.witness == b.witness);
    CHECK(a.samples_used == b.samples_used);

    SplitMix64 r1(5), r2(5);
    for (int i = 0; i < 20; ++i) CHECK(random_rational(r1, 7) == random_rational(r2, 7));
}

TEST_CASE("cayley sampling") {
    // borel + opposite borel fills sl(2,R); sampling from the full algebra
    auto rf = construct({FamilyTag::sl_R, {2}});
    const auto& g = *rf.alg;
    Subspace b = subspace_sum(rf.par.a, rf.par.n);
    Subspace bbar = subspace_sum(rf.par.a, rf.par.nbar);
    auto res = generic_sum_rank_cayley(g, b, bbar, Subspace::full(3), SampleConfig{});
    CHECK(res.full);
    CHECK(res.max_rank == 3);

    // the witness is a group element: it preserves tracelessness by conjugation
    Subspace moved = ad_conjugate(g, res.witness, inverse(res.witness), bbar);
    CHECK(subspace_sum(b, moved).dim() == 3);
}
