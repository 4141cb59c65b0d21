#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdt/checks.hpp"
#include "gdt/tree.hpp"
#include "gdt/word.hpp"

#include <random>

using namespace gdt;

TEST_CASE("word reduction and group laws") {
    int g = 2;
    CHECK(word_mul(parse_word("a1 b1", g), parse_word("B1 A1", g)).empty());
    CHECK(word_inv(parse_word("a1 B2", g)) == parse_word("b2 A1", g));
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        Word x = random_word(rng, g, 5), y = random_word(rng, g, 5);
        CHECK(word_mul(x, word_inv(x)).empty());
        CHECK(word_inv(word_mul(x, y)) == word_mul(word_inv(y), word_inv(x)));
        CHECK(word_conj(x, y) == word_mul(word_mul(y, x), word_inv(y)));
        CHECK(word_comm(x, y) ==
              word_mul(word_mul(x, y), word_mul(word_inv(x), word_inv(y))));
    }
}

TEST_CASE("word parser") {
    CHECK(parse_word("", 2).empty());
    CHECK(word_str(parse_word("a1 B2", 2)) == "a1 B2");
    CHECK(parse_word("a1 A1 b2", 2) == parse_word("b2", 2));
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_word("c1", 2)),
                         doctest::Contains("c1"), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(parse_word("a3", 2)), std::invalid_argument);
}

TEST_CASE("zeta word") {
    int g = 2;
    Word z = zeta_word(g);
    CHECK(z == word_mul(word_comm(parse_word("a1", g), parse_word("b1", g)),
                        word_comm(parse_word("a2", g), parse_word("b2", g))));
}

TEST_CASE("tree parsing and commutators") {
    std::vector<std::string> toks;
    Tree t = parse_tree("[g1,[[g2,g3],g4]]", toks);
    CHECK(t.nleaves == 4);
    CHECK(toks == std::vector<std::string>{"g1", "g2", "g3", "g4"});
    CHECK(tree_str(t, toks) == "[g1,[[g2,g3],g4]]");
    int g = 2;
    std::vector<Word> colors = {parse_word("a1", g), parse_word("b1", g),
                                parse_word("a2", g), parse_word("b2", g)};
    CHECK(comm_of_tree(t, colors) ==
          word_comm(colors[0], word_comm(word_comm(colors[1], colors[2]), colors[3])));
}

TEST_CASE("phi golden values") {
    CheckResult r = check_phi_golden();
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("pruning invariance of phi") {
    CheckResult r = check_pruning(123);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("xi at the root edge is the full commutator") {
    std::mt19937_64 rng(17);
    int g = 2;
    for (int it = 0; it < 20; ++it) {
        Tree t = random_tree(rng, 2 + static_cast<int>(rng() % 4));
        std::vector<Word> cols;
        for (int i = 0; i < t.nleaves; ++i) {
            Word c = random_word(rng, g, 1 + static_cast<int>(rng() % 2));
            while (c.empty()) c = random_word(rng, g, 1);
            cols.push_back(c);
        }
        CHECK(xi(t, cols, t.root) == comm_of_tree(t, cols));
    }
}
