#pragma once

#include "gdt/tensor.hpp"

#include <utility>
#include <vector>

namespace gdt {

// All Lyndon words of length exactly d over the 2g ordered letters, in lex order.
std::vector<Monomial> lyndon_words(int genus, int d);

bool is_lyndon(const Monomial& w);

// Standard (right) factorization w = uv of a Lyndon word of length >= 2:
// v is the lexicographically smallest proper suffix.
std::pair<Monomial, Monomial> standard_factorization(const Monomial& w);

// Witt number: dimension of the degree-d part of the free Lie algebra on n letters.
long witt_number(int n, int d);

// Tensor expansion of the standard bracketing of a Lyndon word (cached).
const TensorSeries& lyndon_bracket_expansion(int genus, const Monomial& w);

// Render the standard bracketing, e.g. "[a1,[a1,b1]]".
std::string lyndon_bracket_str(const Monomial& w);

// Graded element of the free Lie algebra in Lyndon coordinates. Keys are
// Lyndon words (degree = length), values nonzero rationals.
class LieElement {
public:
    int genus = 1;
    int trunc = 0;
    std::map<Monomial, Rational> coeffs;

    LieElement() = default;
    LieElement(int genus_, int trunc_) : genus(genus_), trunc(trunc_) {}

    bool is_zero() const { return coeffs.empty(); }
    int low_degree() const;
    void add_term(const Monomial& w, const Rational& c);
    LieElement graded_part(int d) const;
    bool is_integral() const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    friend LieElement operator+(LieElement x, const LieElement& y) { return x += y; }
    friend LieElement operator-(LieElement x, const LieElement& y) { return x -= y; }
    friend LieElement operator*(const Rational& c, LieElement x);
    friend bool operator==(const LieElement& x, const LieElement& y) {
        return x.coeffs == y.coeffs;
    }
};

TensorSeries from_lyndon(const LieElement& x, int trunc);

struct ToLyndonResult {
    LieElement lie;
    TensorSeries residue; // zero iff the input was primitive (degrees >= 1) with no constant term
    bool ok() const { return residue.is_zero(); }
};

// Write a series in Lyndon coordinates by triangular elimination; the non-Lie
// part (if any) is returned as the residue.
ToLyndonResult to_lyndon(const TensorSeries& u);

LieElement lie_bracket(const LieElement& x, const LieElement& y, int trunc);

// The symplectic bivector omega = -sum_i [a_i, b_i] (as a LieElement); the
// boundary class satisfies log theta(zeta) = -omega for symplectic theta.
LieElement omega_bivector(int genus);

std::string to_string(const LieElement& x);

// Parse a rational-weighted Lie expression such as
// "[a1,[a1,b1]] - 3/2 [b1,[a1,b1]]" or a single letter "a1".
LieElement parse_lie(const std::string& text, int genus);

} // namespace gdt
