#pragma once

#include "gdt/lyndon.hpp"
#include "gdt/word.hpp"

#include <random>
#include <string>
#include <vector>

namespace gdt {

// Planar binary rooted tree. Every node doubles as the edge whose terminal
// vertex it is (edges are oriented away from the root); the root node is the
// root edge. Leaves are ordered left to right and indexed from 0.
struct Tree {
    struct Node {
        int left = -1, right = -1, parent = -1;
        int leaf = -1; // leaf index, or -1 for internal nodes
    };
    std::vector<Node> nodes;
    int root = -1;
    int nleaves = 0;

    bool is_leaf(int v) const { return nodes[v].leaf >= 0; }
};

Tree tree_leaf();
Tree tree_join(const Tree& l, const Tree& r);

// Node id of the j-th leaf (0-based).
int leaf_node(const Tree& t, int j);

// Nested commutator obtained by reading internal vertices as [left, right].
Word comm_of_tree(const Tree& t, const std::vector<Word>& colors);

// xi(e): the commutator of the subtree hanging below edge e (= the leaf color
// for leaf edges).
Word xi(const Tree& t, const std::vector<Word>& colors, int edge);

// Phi_e(T, colors, h): the inductive edge values; the root edge carries h.
Word phi(const Tree& t, const std::vector<Word>& colors, const Word& h, int edge);
// Phi at the j-th leaf edge (0-based j).
Word phi_leaf(const Tree& t, const std::vector<Word>& colors, const Word& h, int j);

// Pruning at edge e: the root component of the cut at t(e), with the new leaf
// colored xi(e). `edge` in the result is the edge of the pruned tree that
// corresponds to e (the new leaf's edge).
struct Pruned {
    Tree tree;
    std::vector<Word> colors;
    int edge = -1;
};
Pruned prune(const Tree& t, const std::vector<Word>& colors, int edge);

// Grammar: "[x,y]" nested, leaf tokens are identifiers; e.g. "[g1,[[g2,g3],g4]]".
// Leaf token names are appended to leaf_tokens in left-to-right order.
Tree parse_tree(const std::string& s, std::vector<std::string>& leaf_tokens);

// The standard-factorization bracketing of a Lyndon word as a tree with
// letter-colored leaves.
struct LetterTree {
    Tree tree;
    std::vector<Letter> letters;
};
LetterTree lyndon_tree(const Monomial& w);

// Uniformly random planar tree shape with m leaves.
Tree random_tree(std::mt19937_64& rng, int m);

std::string tree_str(const Tree& t, const std::vector<std::string>& leaf_names);

} // namespace gdt
