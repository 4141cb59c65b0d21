#pragma once

#include "gdt/expansion.hpp"
#include "gdt/tree.hpp"

namespace gdt {

// A product of k-leaf tree commutators approximating a Gamma_k word.
struct TreeTerm {
    Tree tree;
    std::vector<Word> colors;
};

struct CommutatorExpression {
    int genus = 1;
    int k = 2;
    Word gamma; // the decomposed word
    std::vector<TreeTerm> terms;

    Word product() const;
};

// Express w in Gamma_k as a product of k-leaf tree commutators, correct
// modulo Gamma_{k+depth} (depth in {1,2}). Depth 2 realizes the degree-(k+1)
// residue with composite-colored leaves.
CommutatorExpression decompose(const Word& w, int genus, int k, int depth);

} // namespace gdt
