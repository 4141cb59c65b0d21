#pragma once

#include "gdt/decompose.hpp"
#include "gdt/expansion.hpp"
#include "gdt/pairing.hpp"

namespace gdt {

// Truncated automorphism of the completed tensor algebra, stored by its images
// of the basis letters and applied by substitution.
class Automorphism {
public:
    int genus = 1;
    int trunc = 1;
    std::vector<TensorSeries> images; // index = basis letter

    Automorphism() = default;
    Automorphism(int genus_, int trunc_);

    TensorSeries apply(const TensorSeries& s) const;
    friend bool operator==(const Automorphism& f, const Automorphism& g) {
        return f.images == g.images;
    }
};

Automorphism identity_aut(int genus, int trunc);
// (f o g)(h) = f(g(h)).
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism invert(const Automorphism& f);

// Image of theta(x) under f.
TensorSeries aut_apply_word(const Automorphism& f, const Expansion& theta, const Word& x);
// Induced action on the free Lie algebra.
LieElement aut_apply_lie(const Automorphism& f, const LieElement& x);

// Largest j <= trunc-1 such that f is the identity on degrees <= j.
int johnson_depth(const Automorphism& f);

// L(gamma) = |(1/2)(log theta(gamma))^2|, at the expansion's truncation.
CyclicSeries l_gamma(const Expansion& theta, const Word& gamma);

// Derivation of the tensor algebra given by letter images, extended by the
// Leibniz rule. d0 = guaranteed degree shift (images have degree >= d0 + 1).
struct Derivation {
    int genus = 1;
    int trunc = 1;
    int d0 = 0;
    std::vector<TensorSeries> images;

    TensorSeries apply(const TensorSeries& s) const;
};

// S(|h_1...h_m|)(h) = sum_i omega(h_i, h) h_{i+1}...h_{i-1}, linearly extended.
Derivation s_derivation(const CyclicSeries& c);

// exp(D) as an automorphism at truncation `trunc` (requires d0 >= 1).
Automorphism exp_derivation(const Derivation& d, int trunc);

// Tensor route (generalized Dehn twist): (t_gamma)^eps at truncation theta.trunc - 1, as
// exp(eps * S(L(gamma))). Requires lcs_class(gamma) >= k >= 2.
Automorphism dehn_twist(const Expansion& theta, const Word& gamma, int k, int eps);

// Group route. Both return the group-algebra element
// (t_gamma)^eps(x) x^-1 - 1 (exact; congruences hold mod I^{2k+1}).
AlgElement gdt_group_delta(PairingContext& P, const CommutatorExpression& decomp,
                           const Word& x, int eps);
AlgElement gdt_group_delta_coarse(PairingContext& P, const Word& gamma, const Word& x,
                                  int eps);

// Class of (t_gamma)^eps(x) = (1 + delta) theta(x), truncated at `trunc`.
TensorSeries gdt_group_class(const Expansion& theta, const AlgElement& delta,
                             const Word& x, int trunc);

std::string serialize(const Automorphism& f);

} // namespace gdt
