#include <doctest.h>
#include <sph/pairspec.hpp>

using namespace sph;

TEST_CASE("spec parsing and round trip") {
    const char* sources[] = {
        "g = su(3,1); h = su(2,0)@block(0) + su(1,1)@block(1)",
        "g = so(4,4); h = sp(1,R)@tensor + sp(2,R)@tensor",
        "g = sl(3,H); h = sl(3,C)@realify",
        "g = su(2,3)",
        "g = so*(10); h = u(2,3)@unitary",
        "g = so(6,3); h = so(2) + g2_split",
        "g = su(1,2); h = su(1,1)@split + u1",
    };
    for (const char* src : sources) {
        PairSpec s = parse_spec(src);
        CHECK(parse_spec(print_spec(s)) == s);
    }

    PairSpec s = parse_spec(sources[0]);
    CHECK(s.g_head == "su");
    CHECK(s.g_args == std::vector<std::string>{"3", "1"});
    CHECK(s.h_terms.size() == 2);
    CHECK(s.h_terms[0].emb->name == "block");
    CHECK(s.h_terms[0].emb->args == std::vector<long>{0});
    CHECK(print_spec(s) == sources[0]);
}

TEST_CASE("positioned parse errors") {
    try {
        parse_spec("g = su(2,)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("column 10") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_spec("g = sx(2,2)"), UnknownFamily);
    CHECK_THROWS_AS(parse_spec("g = sl(3)"), ArityError);
    CHECK_THROWS_AS(parse_spec("g = su(2,2); h = su(1,1)@warp"), ParseError);
    CHECK_THROWS_AS(parse_spec("g = su(2,2); h ="), ParseError);
    CHECK_THROWS_AS(parse_spec("h = su(1,1)"), ParseError);
}

TEST_CASE("building pairs from recipes") {
    auto dims = [](const char* src) {
        BuiltPair b = build_pair(parse_spec(src));
        return std::pair<std::size_t, std::size_t>{b.g.dim(), b.h.dim()};
    };

    CHECK(dims("g = su(3,1); h = su(2,0)@block(0) + su(1,1)@block(1)") ==
          std::pair<std::size_t, std::size_t>{15, 6});
    CHECK(dims("g = so(4,4); h = sp(1,R)@tensor + sp(2,R)@tensor") ==
          std::pair<std::size_t, std::size_t>{28, 13});
    CHECK(dims("g = sl(3,H); h = sl(3,C)@realify") ==
          std::pair<std::size_t, std::size_t>{35, 16});
    CHECK(dims("g = su(2,2); h = su(1,1)@split + su(1,1)@split") ==
          std::pair<std::size_t, std::size_t>{15, 6});
    CHECK(dims("g = so*(10); h = u(2,3)@unitary") ==
          std::pair<std::size_t, std::size_t>{45, 25});
    CHECK(dims("g = sp(1,1); h = sp(1,C)@fix") ==
          std::pair<std::size_t, std::size_t>{10, 6});
    CHECK(dims("g = so(8,1); h = sp(2)@realify") ==
          std::pair<std::size_t, std::size_t>{36, 10});
    CHECK(dims("g = so(7,1); h = g2") == std::pair<std::size_t, std::size_t>{28, 14});
    CHECK(dims("g = so(8,1); h = spin(7)") == std::pair<std::size_t, std::size_t>{36, 21});
    CHECK(dims("g = so(7,C); h = g2") == std::pair<std::size_t, std::size_t>{42, 28});
    CHECK(dims("g = so(8,C); h = sl(4,C)@dual") ==
          std::pair<std::size_t, std::size_t>{56, 30});
    CHECK(dims("g = sl(3,H); h = sl(2,H)@block + u1") ==
          std::pair<std::size_t, std::size_t>{35, 16});
    CHECK(dims("g = su(2,2); h = su(1,1)@diag(2)") ==
          std::pair<std::size_t, std::size_t>{15, 3});

    // whole-g recipe keeps the ambient rank
    BuiltPair whole = build_pair(parse_spec("g = su(2,3)"));
    CHECK(whole.h.dim() == 24);
    CHECK(whole.rank_h == 2);
    CHECK(whole.g.par.n.dim() == 10);

    // zero-dimensional factors drop out
    CHECK(dims("g = su(2,1); h = su(1,1)@split + su(1,0)@split") ==
          std::pair<std::size_t, std::size_t>{8, 3});
}

TEST_CASE("representation surface syntax") {
    CHECK(parse_rep("std(so,3,C)").dim_v == 3);
    CHECK(parse_rep("sym2(sl,2,C)").dim_v == 3);
    CHECK(parse_rep("wedge2(sl,5,C)").dim_v == 10);
    CHECK(parse_rep("wedge0(3,3)").dim_v == 14);
    CHECK(parse_rep("spin(7)").dim_v == 8);
    CHECK(parse_rep("g2").dim_v == 7);
    CHECK_THROWS_AS(parse_rep("spinor(7)"), UnknownFamily);
    CHECK_THROWS_AS(parse_rep("sym2()"), ParseError);
}
