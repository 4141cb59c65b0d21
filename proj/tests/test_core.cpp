#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdt/lyndon.hpp"

#include <random>

using namespace gdt;

TEST_CASE("tensor arithmetic basics") {
    TensorSeries a = TensorSeries::gen(1, 4, 0), b = TensorSeries::gen(1, 4, 1);
    CHECK(a * b + b * a == b * a + a * b);
    CHECK((a + b) * (a - b) == a * a - a * b + b * a - b * b);
    CHECK((Rational(1, 2) * a) * (Rational(2) * b) == a * b);
    TensorSeries u = TensorSeries::unit(1, 4);
    CHECK(u * a == a);
    CHECK(a.truncated(0) == TensorSeries(1, 0));
}

TEST_CASE("log/exp are mutually inverse") {
    TensorSeries x = TensorSeries::gen(1, 5, 0) + TensorSeries::gen(1, 5, 1) +
                     Rational(1, 3) * (TensorSeries::gen(1, 5, 0) * TensorSeries::gen(1, 5, 1));
    CHECK(t_log(t_exp(x)) == x);
    TensorSeries g = TensorSeries::unit(1, 5) + TensorSeries::gen(1, 5, 0);
    CHECK(t_exp(t_log(g)) == g);
}

TEST_CASE("BCH in low degree") {
    TensorSeries a = TensorSeries::gen(1, 3, 0), b = TensorSeries::gen(1, 3, 1);
    TensorSeries z = bch(a, b);
    TensorSeries expect = a + b + Rational(1, 2) * t_bracket(a, b) +
                          Rational(1, 12) * t_bracket(a, t_bracket(a, b)) +
                          Rational(1, 12) * t_bracket(b, t_bracket(b, a));
    CHECK(z == expect);
}

TEST_CASE("cyclic projection identifies rotations") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        TensorSeries u(2, 4), v(2, 4);
        for (int t = 0; t < 4; ++t) {
            Monomial m;
            for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i)
                m.push_back(static_cast<char>(rng() % 4));
            (t % 2 ? u : v).add_term(m, Rational(1 + static_cast<int>(rng() % 5)));
        }
        CHECK(cyclic_project(u * v) == cyclic_project(v * u));
    }
}

TEST_CASE("Lyndon words, Witt numbers, standard factorization") {
    for (int g = 1; g <= 3; ++g)
        for (int d = 1; d <= 6; ++d)
            CHECK(static_cast<long>(lyndon_words(g, d).size()) == witt_number(2 * g, d));
    for (const Monomial& w : lyndon_words(2, 5)) {
        CHECK(is_lyndon(w));
        if (w.size() >= 2) {
            auto [u, v] = standard_factorization(w);
            CHECK(u + v == w);
            CHECK(is_lyndon(u));
            CHECK(is_lyndon(v));
            CHECK(u < v);
        }
    }
}

TEST_CASE("to_lyndon inverts from_lyndon") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        LieElement x(2, 4);
        for (int d = 1; d <= 4; ++d) {
            auto ws = lyndon_words(2, d);
            x.add_term(ws[rng() % ws.size()],
                       Rational(1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 3)));
        }
        ToLyndonResult r = to_lyndon(from_lyndon(x, 4));
        CHECK(r.ok());
        CHECK(r.lie == x);
    }
}

TEST_CASE("to_lyndon reports non-Lie input") {
    TensorSeries u(1, 2);
    u.add_term(Monomial(2, static_cast<char>(0)), 1); // a1 a1 is not primitive
    CHECK(!to_lyndon(u).ok());
}

TEST_CASE("Lie bracket antisymmetry and Jacobi") {
    std::mt19937_64 rng(8);
    auto rnd = [&](int d) {
        LieElement x(2, 4);
        auto ws = lyndon_words(2, d);
        x.add_term(ws[rng() % ws.size()], 1 + static_cast<int>(rng() % 3));
        return x;
    };
    for (int it = 0; it < 10; ++it) {
        LieElement x = rnd(1), y = rnd(1), z = rnd(2);
        CHECK(lie_bracket(x, y, 4) == Rational(-1) * lie_bracket(y, x, 4));
        LieElement j = lie_bracket(x, lie_bracket(y, z, 4), 4) +
                       lie_bracket(y, lie_bracket(z, x, 4), 4) +
                       lie_bracket(z, lie_bracket(x, y, 4), 4);
        CHECK(j.is_zero());
    }
}

TEST_CASE("parse_lie round trip") {
    LieElement x = parse_lie("3/2 [a1,[a1,b1]] - b2", 2);
    CHECK(x.coeffs.size() == 2);
    CHECK(parse_lie(to_string(x), 2) == x);
}
