#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdt/checks.hpp"
#include "gdt/diagrams.hpp"

#include <random>

using namespace gdt;

TEST_CASE("glue golden value") {
    int g = 1;
    LieElement ab = parse_lie("[a1,b1]", g);
    HElement G = glue(ab, ab);
    HElement expect(g, 2);
    expect.add_term(a_gen(1), Rational(2) * parse_lie("[b1,[a1,b1]]", g));
    expect.add_term(b_gen(1), Rational(2) * parse_lie("[[a1,b1],a1]", g));
    CHECK(G == expect);
}

TEST_CASE("glue is symmetric and bilinear") {
    int g = 2;
    std::mt19937_64 rng(41);
    auto rnd = [&](int d) {
        LieElement x(g, d);
        auto ws = lyndon_words(g, d);
        x.add_term(ws[rng() % ws.size()], 1 + static_cast<int>(rng() % 3));
        x.add_term(ws[rng() % ws.size()], -2);
        return x;
    };
    for (int it = 0; it < 10; ++it) {
        LieElement x = rnd(2), y = rnd(3), z = rnd(3);
        CHECK(glue(x, y) == glue(y, x));
        CHECK(glue(x, y + z) == glue(x, y) + glue(x, z));
        CHECK(glue(x, Rational(3) * y) == Rational(3) * glue(x, y));
    }
}

TEST_CASE("glue lands in the contraction kernel") {
    int g = 2;
    std::mt19937_64 rng(43);
    auto ws2 = lyndon_words(g, 2), ws3 = lyndon_words(g, 3);
    for (int it = 0; it < 10; ++it) {
        LieElement x(g, 2), y(g, 3);
        x.add_term(ws2[rng() % ws2.size()], 1);
        y.add_term(ws3[rng() % ws3.size()], 1);
        CHECK(h_contraction(glue(x, y)).is_zero());
        CHECK(h_contraction(glue(x, x)).is_zero());
    }
}

TEST_CASE("tau golden value and expansion transport") {
    int g = 1, k = 2;
    Expansion th = symplectic_expansion(g, 2 * k + 1);
    Automorphism U = dehn_twist(th, parse_word("a1 b1 A1 B1", g), k, 1);
    HElement T = tau(th, U, 2);
    HElement expect(g, 2);
    expect.add_term(a_gen(1), parse_lie("[b1,[a1,b1]]", g));
    expect.add_term(b_gen(1), parse_lie("[[a1,b1],a1]", g));
    CHECK(T == expect);
    CHECK(T.is_integral());
    std::vector<HElement> comps = log_components(th, U);
    CHECK(comps[0].is_zero());
    CHECK(comps[1] == T);
}

TEST_CASE("tau requires enough depth") {
    int g = 1;
    Expansion th = symplectic_expansion(g, 5);
    Automorphism U = dehn_twist(th, parse_word("a1 b1 A1 B1", g), 2, 1);
    CHECK(johnson_depth(U) == 2);
    // Below the depth the value is zero; above the truncation it is an error.
    CHECK(tau(th, U, 1).is_zero());
    CHECK_THROWS_AS(static_cast<void>(tau(th, U, 4)), std::invalid_argument);
}

TEST_CASE("tree reconstruction of the log components") {
    CheckResult r = check_tree_reconstruction(47);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("surgery formulas, even and odd") {
    CheckResult r = check_surgery_formulas(53);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("dimensions and ranks") {
    CheckResult r = check_ranks();
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(h_dim(2, 1) == 1);
    CHECK(h_rank(2, 1) == 1);
}
