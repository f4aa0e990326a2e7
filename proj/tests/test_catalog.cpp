#include <doctest.h>
#include <sph/catalog.hpp>
#include <sph/checks.hpp>
#include <sph/pairspec.hpp>

using namespace sph;

namespace {

const CatalogCase& by_id(const std::string& id) {
    for (const CatalogCase& c : catalog())
        if (c.id == id) return c;
    FAIL("missing catalog case ", id);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("expression evaluation") {
    ParamMap env{{"n", 5}, {"k", 2}};
    CHECK(eval_expr("2*n+1", env) == 11);
    CHECK(eval_expr("(n-k)*(n-k-1)/2", env) == 3);
    CHECK(eval_expr("n/2", env) == 2);   // floors
    CHECK(eval_expr("n%2", env) == 1);
    CHECK(eval_cond("n >= 2 && k <= n", env));
    CHECK(eval_cond("odd(n)", env));
    CHECK(eval_cond("even(k)", env));
    CHECK(eval_cond("n == 4 || k == 2", env));
    CHECK_FALSE(eval_cond("n != 5", env));
    CHECK_THROWS_AS(eval_expr("n +", env), OutOfRange);
    CHECK_THROWS_AS(eval_expr("m", env), OutOfRange);
}

TEST_CASE("every case carries a quote anchor") {
    CHECK(catalog().size() > 100);
    for (const CatalogCase& c : catalog()) {
        CHECK_MESSAGE(!c.cite.empty(), c.id);
        CHECK_MESSAGE(!c.kind.empty(), c.id);
        if (!c.exec) CHECK_MESSAGE(!c.exec_note.empty(), c.id);
    }
}

TEST_CASE("list filters") {
    CHECK(list_cases({}).size() == catalog().size());

    auto t1 = list_cases({.table = "T1", .max_dim = 40});
    auto has = [&](const char* id) {
        for (auto* c : t1)
            if (c->id == id) return true;
        return false;
    };
    CHECK(has("T1.1"));   // su(3,1), dim 15
    CHECK(has("T1.4"));   // sl(3,H), dim 35
    CHECK_FALSE(has("T1.16"));  // so*(10), dim 45

    CHECK(list_cases({.table = "T3"}).size() == 10);

    for (auto* c : list_cases({.family = "so_star"}))
        CHECK(c->family == "so_star");
}

TEST_CASE("instantiation follows the side conditions") {
    const CatalogCase& c14 = by_id("T1.4");
    CHECK(instantiate(c14, {{"n", 3}}).expected == "SPHERICAL");
    CHECK(instantiate(c14, {{"n", 4}}).expected == "NOT_SPHERICAL_PROBABLE");
    CHECK(instantiate(c14, {{"n", 3}}).g_src == "sl(3,H)");
    CHECK_THROWS_AS(instantiate(c14, {{"n", 1}}), OutOfRange);
    CHECK_THROWS_AS(instantiate(c14, {}), OutOfRange);

    Instance i19 = instantiate(by_id("T1.9"), {{"n", 5}, {"q", 2}});
    CHECK(i19.expected == "SPHERICAL");
    CHECK(i19.g_src == "so(5,1)");
    CHECK(i19.h_src == "so(1,1)@block + su(2)@realify + u1");

    Instance i26 = instantiate(by_id("T2.6"), {{"n", 3}});
    CHECK(i26.expected == "NOT_PREHOMOGENEOUS_PROBABLE");
    CHECK(i26.expected_form == 1);
    CHECK(i26.rep_src == "wedge0(2,3)");

    Instance i31 = instantiate(by_id("T3.1"), {{"n", 2}});
    CHECK(i31.expected == "FACTORIZATION");
    CHECK(i31.expected_intersection == 8);
    CHECK(i31.h2_src == "sp(2,C)@block");

    Instance i41 = instantiate(by_id("T4.1"), {{"p", 1}, {"q", 3}});
    CHECK(i41.expected_lcaph == 1);
}

TEST_CASE("flips sit on the negative side of the condition") {
    for (const CatalogCase& c : catalog())
        for (const ParamMap& f : c.flips) {
            Instance inst = instantiate(c, f);
            CHECK_MESSAGE(inst.expected.find("NOT_") == 0, c.id);
        }
}

TEST_CASE("minimal instantiations stay desk-scale") {
    for (const CatalogCase& c : catalog()) {
        if (!c.exec) continue;
        CHECK_MESSAGE(!c.minimal.empty(), c.id);
        for (const ParamMap& m : c.minimal) {
            Instance inst = instantiate(c, m);
            CHECK_MESSAGE(!inst.expected.empty(), c.id);
            std::optional<long> d = ambient_dim(c, m);
            if (c.kind == "preh") continue;  // rep rows carry no ambient
            REQUIRE_MESSAGE(d.has_value(), c.id);
            // one deliberately heavy row; everything else fits in so(16,1)
            CHECK_MESSAGE(*d <= (c.id == "T3.10" ? 240 : 136), c.id);
        }
    }
}

TEST_CASE("closure: executable coverage per table") {
    std::size_t t1 = 0, t2 = 0, t3 = 0;
    for (const CatalogCase& c : catalog()) {
        if (!c.exec) continue;
        if (c.table == "T1") ++t1;
        if (c.table == "T2") ++t2;
        if (c.table == "T3") ++t3;
    }
    CHECK(t1 == 17);  // all classical rows
    CHECK(t2 == 15);  // rows 1-14 and 20
    CHECK(t3 == 10);  // all rows
}

TEST_CASE("redundancy lint flags sub-canonical parameters") {
    const CatalogCase& c17 = by_id("T1.7");
    CHECK_FALSE(within_canonical_range(c17, {{"p", 2}, {"q", 1}}));  // so(4,2)
    CHECK(within_canonical_range(c17, {{"p", 3}, {"q", 1}}));        // so(6,2)
    CHECK_FALSE(within_canonical_range(by_id("T1.5"), {{"p", 1}, {"q", 1}}));
    CHECK(within_canonical_range(by_id("T1.5"), {{"p", 2}, {"q", 1}}));
}

TEST_CASE("rendered recipes build") {
    Instance i = instantiate(by_id("T4.9"),
                             {{"p1", 1}, {"q1", 1}, {"p2", 1}, {"q2", 2}});
    BuiltPair bp = build_pair(parse_spec("g = " + i.g_src + "; h = " + i.h_src));
    CHECK(bp.g.dim() == 10);
    CHECK(bp.h.dim() == 4);
    Verdict v = is_spherical(bp.g, bp.h, SampleConfig{}, bp.rank_h);
    CHECK(outcome_name(v.outcome) == i.expected);

    Instance r = instantiate(by_id("T2.8"), {});
    RepData rep = parse_rep(r.rep_src);
    CHECK(outcome_name(is_prehomogeneous(rep, SampleConfig{}).outcome) == r.expected);
    CHECK(invariant_form_type(rep).type == r.expected_form);
}
