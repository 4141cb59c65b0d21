#include "gdt/decompose.hpp"

#include <stdexcept>

namespace gdt {

Word CommutatorExpression::product() const {
    Word p;
    for (const auto& t : terms) p = word_mul(p, comm_of_tree(t.tree, t.colors));
    return p;
}

namespace {

// Realize the standard bracketing of a Lyndon word as a tree with
// single-generator colors; `negate` swaps the two root children, which
// negates the leading class ([y,x] tree for -[x,y]).
TreeTerm lyndon_tree_term(const Monomial& w, bool negate) {
    LetterTree lt;
    if (negate && w.size() >= 2) {
        auto [u, v] = standard_factorization(w);
        LetterTree l = lyndon_tree(u);
        LetterTree r = lyndon_tree(v);
        lt.tree = tree_join(r.tree, l.tree);
        lt.letters = r.letters;
        lt.letters.insert(lt.letters.end(), l.letters.begin(), l.letters.end());
    } else {
        lt = lyndon_tree(w);
    }
    TreeTerm t;
    t.tree = lt.tree;
    for (Letter h : lt.letters) t.colors.push_back(Word{word_letter(h)});
    return t;
}

// Fold the leftmost cherry (internal vertex with two leaf children) into a
// single leaf colored by the commutator of the two colors: an m-leaf tree
// term becomes an (m-1)-leaf one with the same commutator value.
struct Folder {
    const Tree& t;
    const std::vector<Word>& colors;
    std::vector<Word> out_colors;
    bool done = false;

    Tree build(int v) {
        const auto& n = t.nodes[v];
        if (n.leaf >= 0) {
            out_colors.push_back(colors[n.leaf]);
            return tree_leaf();
        }
        if (!done && t.is_leaf(n.left) && t.is_leaf(n.right)) {
            done = true;
            out_colors.push_back(
                word_comm(colors[t.nodes[n.left].leaf], colors[t.nodes[n.right].leaf]));
            return tree_leaf();
        }
        Tree l = build(n.left);
        Tree r = build(n.right);
        return tree_join(l, r);
    }
};

TreeTerm fold_once(const TreeTerm& term) {
    Folder f{term.tree, term.colors, {}, false};
    Tree nt = f.build(term.tree.root);
    if (!f.done) throw std::runtime_error("fold_once: no cherry found");
    return {nt, f.out_colors};
}

void append_level(CommutatorExpression& out, const LieElement& cls, int fold_steps) {
    for (const auto& [w, c] : cls.coeffs) {
        if (!is_integer(c)) throw std::runtime_error("decompose: non-integer class");
        Rational a = c > 0 ? c : -c;
        TreeTerm base = lyndon_tree_term(w, c < 0);
        for (int s = 0; s < fold_steps; ++s) base = fold_once(base);
        for (Rational i = 0; i < a; ++i) out.terms.push_back(base);
    }
}

} // namespace

CommutatorExpression decompose(const Word& w, int genus, int k, int depth) {
    if (depth != 1 && depth != 2) throw std::invalid_argument("decompose: depth must be 1 or 2");
    if (k < 2) throw std::invalid_argument("decompose: k must be >= 2");
    if (lcs_class(w, genus, k - 1) < k)
        throw std::invalid_argument("decompose: word class is below k");
    CommutatorExpression out;
    out.genus = genus;
    out.k = k;
    out.gamma = w;
    append_level(out, leading_class(w, genus, k), 0);
    if (depth == 2) {
        Word residue = word_mul(word_inv(out.product()), w); // in Gamma_{k+1}
        append_level(out, leading_class(residue, genus, k + 1), 1);
    }
    return out;
}

} // namespace gdt
