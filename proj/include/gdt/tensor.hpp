#pragma once

#include "gdt/basis.hpp"
#include "gdt/rational.hpp"

#include <map>
#include <string>

namespace gdt {

// A monomial in the tensor algebra: a word over the 2g basis letters, one
// letter per byte. The empty monomial is the unit.
using Monomial = std::string;

std::string monomial_str(const Monomial& m);

// Degree-truncated element of the tensor algebra on H^Q. Sparse map from
// monomials to nonzero rationals; terms of degree > trunc are dropped.
class TensorSeries {
public:
    int genus = 1;
    int trunc = 0;
    std::map<Monomial, Rational> terms;

    TensorSeries() = default;
    TensorSeries(int genus_, int trunc_) : genus(genus_), trunc(trunc_) {}

    static TensorSeries unit(int genus, int trunc);
    static TensorSeries gen(int genus, int trunc, Letter h);

    bool is_zero() const { return terms.empty(); }
    Rational coeff(const Monomial& m) const;
    // Lowest degree with a nonzero term; trunc+1 for the zero series.
    int low_degree() const;

    void add_term(const Monomial& m, const Rational& c);

    TensorSeries graded_part(int d) const;
    TensorSeries truncated(int new_trunc) const;

    TensorSeries& operator+=(const TensorSeries& o);
    TensorSeries& operator-=(const TensorSeries& o);
    friend TensorSeries operator+(TensorSeries x, const TensorSeries& y) { return x += y; }
    friend TensorSeries operator-(TensorSeries x, const TensorSeries& y) { return x -= y; }
    friend TensorSeries operator*(const TensorSeries& x, const TensorSeries& y);
    friend TensorSeries operator*(const Rational& c, TensorSeries x);
    friend bool operator==(const TensorSeries& x, const TensorSeries& y) {
        return x.terms == y.terms;
    }
};

// log(u) for u with constant term 1; exp(u) for u with constant term 0.
TensorSeries t_log(const TensorSeries& u);
TensorSeries t_exp(const TensorSeries& u);

// bch(x,y) = log(exp(x) exp(y)) for primitive x, y.
TensorSeries bch(const TensorSeries& x, const TensorSeries& y);

// xy - yx.
TensorSeries t_bracket(const TensorSeries& x, const TensorSeries& y);

std::string to_string(const TensorSeries& u);

// Element of the cyclic quotient C(H^Q): monomials keyed by their
// lexicographically minimal rotation.
class CyclicSeries {
public:
    int genus = 1;
    int trunc = 0;
    std::map<Monomial, Rational> terms;

    CyclicSeries() = default;
    CyclicSeries(int genus_, int trunc_) : genus(genus_), trunc(trunc_) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const Rational& c);
    friend bool operator==(const CyclicSeries& x, const CyclicSeries& y) {
        return x.terms == y.terms;
    }
};

Monomial min_rotation(const Monomial& m);
CyclicSeries cyclic_project(const TensorSeries& u);
std::string to_string(const CyclicSeries& u);

} // namespace gdt
