#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdt/checks.hpp"
#include "gdt/expansion.hpp"
#include "gdt/pairing.hpp"

#include <random>

using namespace gdt;

TEST_CASE("pairing table closed form at genus 1") {
    PairingTable t = PairingTable::standard(1);
    // kappa(a,a) = a (x) a - 1 (x) aa
    Word a{1}, b{2};
    BiElement expect(a, a);
    expect.add_term(Word(), word_mul(a, a), -1);
    CHECK(t.entry[0][0] == expect);
    // kappa(a,b) = b (x) a
    CHECK(t.entry[0][1] == BiElement(b, a));
}

TEST_CASE("boundary annihilation, exact in the group algebra") {
    CheckResult r = check_boundary_annihilation(77);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("pairing product, inverse and commutator rules") {
    CheckResult r = check_pairing_identities(78);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("table dump/load roundtrip and env-style loading") {
    for (int g = 1; g <= 3; ++g) {
        PairingTable t = PairingTable::standard(g);
        CHECK(PairingTable::load(t.dump()) == t);
    }
}

TEST_CASE("kappa is bilinear over the group algebra") {
    int g = 2;
    PairingContext P(g);
    std::mt19937_64 rng(9);
    for (int it = 0; it < 20; ++it) {
        Word u = random_word(rng, g, 3), v = random_word(rng, g, 3),
             w = random_word(rng, g, 3);
        AlgElement s;
        s.add_term(u, Rational(2, 3));
        s.add_term(v, -1);
        BiElement lhs = P.kappa(s, AlgElement(w));
        BiElement rhs = Rational(2, 3) * P.kappa_words(u, w);
        rhs -= P.kappa_words(v, w);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("commutator image identity in the completed group algebra") {
    // (1 (x) 1 - x (x) x^-1) diamond-applied to (u - 1) agrees with [u,x] - 1
    // up to degree 2k for u of class k.
    int g = 2, k = 2;
    std::mt19937_64 rng(13);
    Expansion th = standard_expansion(g, 2 * k);
    for (int it = 0; it < 10; ++it) {
        Word u = word_comm(random_word(rng, g, 2), random_word(rng, g, 2));
        if (lcs_class(u, g, k - 1) < k) continue;
        Word x = random_word(rng, g, 3);
        BiElement one{Word(), Word()};
        AlgElement um1 = AlgElement(u) - AlgElement::unit();
        AlgElement lhs = diamond_app(one - BiElement(x, word_inv(x)), um1);
        AlgElement rhs = AlgElement(word_comm(u, x)) - AlgElement::unit();
        CHECK(th.expand_alg(lhs) == th.expand_alg(rhs));
    }
}
