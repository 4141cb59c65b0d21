#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdt/checks.hpp"
#include "gdt/twist.hpp"

#include <random>

using namespace gdt;

TEST_CASE("automorphism compose/invert and the boundary") {
    int g = 2, k = 2;
    Expansion th = symplectic_expansion(g, 2 * k + 1);
    Word gamma = parse_word("a1 b1 A1 B1", g);
    Automorphism U = dehn_twist(th, gamma, k, 1);
    Automorphism V = invert(U);
    CHECK(compose(U, V) == identity_aut(g, U.trunc));
    CHECK(compose(V, U) == identity_aut(g, U.trunc));
    CHECK(V == dehn_twist(th, gamma, k, -1));
    TensorSeries z = th.expand_word(zeta_word(g)).truncated(U.trunc);
    CHECK(U.apply(z) == z);
    CHECK(johnson_depth(U) == 2 * k - 2);
    CHECK(johnson_depth(identity_aut(g, 5)) == 4);
}

TEST_CASE("s_derivation satisfies the Leibniz rule") {
    int g = 1;
    CyclicSeries c(g, 3);
    c.add_term(Monomial("\x00\x01\x01", 3), Rational(2));
    Derivation d = s_derivation(c);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 10; ++it) {
        TensorSeries u(g, 4), v(g, 4);
        for (int t = 0; t < 3; ++t) {
            Monomial m;
            for (int i = 0, n = 1 + static_cast<int>(rng() % 2); i < n; ++i)
                m.push_back(static_cast<char>(rng() % 2));
            (t % 2 ? u : v).add_term(m, 1 + static_cast<int>(rng() % 3));
        }
        d.trunc = 4;
        CHECK(d.apply(u * v) == d.apply(u) * v + u * d.apply(v));
    }
}

TEST_CASE("one cross-route instance, refined and coarse") {
    int g = 2, k = 2;
    Expansion th = symplectic_expansion(g, 2 * k + 1);
    PairingContext P(g);
    Word gamma = word_comm(parse_word("a1", g), parse_word("b2 a1", g));
    REQUIRE(lcs_class(gamma, g, k) >= k);
    for (int eps : {1, -1}) {
        Automorphism U = dehn_twist(th, gamma, k, eps);
        CommutatorExpression de = decompose(gamma, g, k, 2);
        for (Letter h = 0; h < 2 * g; ++h) {
            Word x{word_letter(h)};
            TensorSeries lhs = aut_apply_word(U, th, x);
            CHECK(lhs.truncated(2 * k) ==
                  gdt_group_class(th, gdt_group_delta(P, de, x, eps), x, 2 * k));
            CHECK(lhs.truncated(2 * k - 1) ==
                  gdt_group_class(th, gdt_group_delta_coarse(P, gamma, x, eps), x,
                                  2 * k - 1));
        }
    }
}

TEST_CASE("twist rejects bad arguments") {
    Expansion th = symplectic_expansion(1, 5);
    CHECK_THROWS_AS(static_cast<void>(dehn_twist(th, parse_word("a1", 1), 2, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        static_cast<void>(dehn_twist(th, parse_word("a1 b1 A1 B1", 1), 1, 1)),
        std::invalid_argument);
}

TEST_CASE("automorphism serialization is stable") {
    Expansion th = symplectic_expansion(1, 5);
    Automorphism U = dehn_twist(th, parse_word("a1 b1 A1 B1", 1), 2, 1);
    CHECK(serialize(U) == serialize(U));
    CHECK(serialize(U).find("gdt-automorphism") == 0);
}
