#pragma once

#include "gdt/twist.hpp"

#include <map>

namespace gdt {

// Element of H (x) L_{j+1}, stored as letter -> homogeneous Lie part. The
// target of the j-th Johnson homomorphism (tree Jacobi diagrams with one
// univalent vertex marked, written in the H (x) L form).
class HElement {
public:
    int genus = 1;
    int j = 1; // Lie parts are homogeneous of degree j+1
    std::map<Letter, LieElement> val;

    HElement() = default;
    HElement(int genus_, int j_) : genus(genus_), j(j_) {}

    bool is_zero() const;
    void add_term(Letter h, const LieElement& x);
    bool is_integral() const;

    HElement& operator+=(const HElement& o);
    HElement& operator-=(const HElement& o);
    friend HElement operator+(HElement x, const HElement& y) { return x += y; }
    friend HElement operator-(HElement x, const HElement& y) { return x -= y; }
    friend HElement operator*(const Rational& c, HElement x);
    friend bool operator==(const HElement& x, const HElement& y);
};

std::string to_string(const HElement& x);

// sum_h [h, val(h^*)]: vanishes exactly when x lies in the diagram target
// h_j (the kernel of the bracket contraction).
LieElement h_contraction(const HElement& x);

// Glue two homogeneous Lie elements (degrees k, l) into an element of
// H (x) L_{k+l-1}: sum over leaves of the first tree re-rooted at that leaf
// with the second tree attached at the old root, plus the symmetric sum.
HElement glue(const LieElement& x, const LieElement& y);

// j-th Johnson homomorphism of f (requires johnson_depth(f) >= j), computed
// from theta-conjugation and omega-duality.
HElement tau(const Expansion& theta, const Automorphism& f, int j);

// Components of log f in H (x) L_{j+1} for j = 1 .. f.trunc - 1 (index j-1).
std::vector<HElement> log_components(const Expansion& theta, const Automorphism& f);

// dim h_j for the genus-g target: 2g * w(j+1) - w(j+2), Witt numbers in 2g
// letters.
long long h_dim(int j, int genus);

// Rank of the span of glue values over the Lyndon-basis families of degree
// matching j (symmetrized in the even case).
int h_rank(int j, int genus);

} // namespace gdt
