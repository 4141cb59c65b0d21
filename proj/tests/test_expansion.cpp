#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdt/checks.hpp"
#include "gdt/decompose.hpp"

#include <random>

using namespace gdt;

TEST_CASE("magnus expansion is multiplicative and group-like") {
    int g = 2, N = 4;
    std::mt19937_64 rng(21);
    Expansion th0 = standard_expansion(g, N);
    for (int it = 0; it < 20; ++it) {
        Word x = random_word(rng, g, 4), y = random_word(rng, g, 4);
        CHECK(th0.expand_word(word_mul(x, y)) ==
              (th0.expand_word(x) * th0.expand_word(y)).truncated(N));
        CHECK(to_lyndon(t_log(th0.expand_word(x))).ok());
    }
    CHECK(magnus(parse_word("a1", g), g, 2) ==
          t_exp(TensorSeries::gen(g, 2, 0)).truncated(2));
}

TEST_CASE("lcs_class and leading_class") {
    int g = 2;
    Word c = word_comm(parse_word("a1", g), parse_word("b1", g));
    CHECK(lcs_class(c, g, 5) == 2);
    CHECK(lcs_class(parse_word("a1", g), g, 5) == 1);
    CHECK(lcs_class(Word(), g, 5) == 6); // identity is in every term
    LieElement lc = leading_class(c, g, 2);
    CHECK(lc == parse_lie("[a1,b1]", g));
    Word deep = word_comm(c, parse_word("a2", g));
    CHECK(lcs_class(deep, g, 5) == 3);
    CHECK(leading_class(deep, g, 3) == parse_lie("[[a1,b1],a2]", g));
}

TEST_CASE("symplectic expansion: boundary condition and serialization") {
    CheckResult r = check_symplectic();
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("decompose reproduces the word modulo deeper terms") {
    int g = 2, k = 2;
    std::mt19937_64 rng(23);
    for (int it = 0; it < 8; ++it) {
        Word w = random_gamma(rng, g, k);
        for (int depth : {1, 2}) {
            CommutatorExpression ce = decompose(w, g, k, depth);
            Word r = word_mul(word_inv(ce.product()), w);
            CHECK(lcs_class(r, g, k + depth) >= k + depth);
            for (const TreeTerm& t : ce.terms) CHECK(t.tree.nleaves >= k);
        }
    }
}

TEST_CASE("decompose is deterministic") {
    int g = 2, k = 2;
    std::mt19937_64 rng(29);
    Word w = random_gamma(rng, g, k);
    CommutatorExpression a = decompose(w, g, k, 2), b = decompose(w, g, k, 2);
    REQUIRE(a.terms.size() == b.terms.size());
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        CHECK(a.terms[i].colors == b.terms[i].colors);
}

TEST_CASE("decompose rejects words of too low class") {
    CHECK_THROWS_AS(static_cast<void>(decompose(parse_word("a1", 2), 2, 2, 1)),
                    std::invalid_argument);
}
