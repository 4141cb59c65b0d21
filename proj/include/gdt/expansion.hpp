#pragma once

#include "gdt/lyndon.hpp"
#include "gdt/word.hpp"

#include <vector>

namespace gdt {

// Group-like expansion of pi: generator images theta(x) = exp(log-image),
// stored by the primitive log-images and truncated at `trunc`.
class Expansion {
public:
    int genus = 1;
    int trunc = 1;
    bool symplectic = false;
    std::vector<TensorSeries> log_images; // index = basis letter (size 2g)

    Expansion() = default;
    Expansion(int genus_, int trunc_);

    // theta(x)^{+-1} for a single signed word letter (cached)
    const TensorSeries& gen_image(int word_letter) const;
    TensorSeries expand_word(const Word& w) const;
    TensorSeries expand_alg(const AlgElement& u) const;
    void clear_cache() const;

private:
    mutable std::map<int, TensorSeries> cache_;
};

// theta_0: letters |-> exp(letter).
Expansion standard_expansion(int genus, int trunc);

// A symplectic expansion: log theta(zeta) = -omega = sum_i [a_i,b_i] exactly
// to truncation, constructed degree by degree from theta_0.
Expansion symplectic_expansion(int genus, int trunc);

// The reference expansion theta_0 applied to a word ("Magnus-type" expansion).
TensorSeries magnus(const Word& w, int genus, int trunc);

// Largest k <= cutoff with w in Gamma_k; returns cutoff+1 for "at least".
int lcs_class(const Word& w, int genus, int cutoff);

// {w}_k as a LieElement with integer coordinates; requires lcs_class >= k.
LieElement leading_class(const Word& w, int genus, int k);

std::string serialize(const Expansion& e);
Expansion deserialize(const std::string& text);

Monomial parse_monomial(const std::string& s, int genus);

} // namespace gdt
