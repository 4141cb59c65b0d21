#include "gdt/tree.hpp"

#include <cctype>
#include <stdexcept>

namespace gdt {

Tree tree_leaf() {
    Tree t;
    t.nodes.push_back({-1, -1, -1, 0});
    t.root = 0;
    t.nleaves = 1;
    return t;
}

Tree tree_join(const Tree& l, const Tree& r) {
    Tree t;
    t.nodes = l.nodes;
    int off = (int)l.nodes.size();
    for (const auto& n : r.nodes) {
        Tree::Node m = n;
        if (m.left >= 0) m.left += off;
        if (m.right >= 0) m.right += off;
        if (m.parent >= 0) m.parent += off;
        if (m.leaf >= 0) m.leaf += l.nleaves;
        t.nodes.push_back(m);
    }
    int root = (int)t.nodes.size();
    t.nodes.push_back({l.root, r.root + off, -1, -1});
    t.nodes[l.root].parent = root;
    t.nodes[r.root + off].parent = root;
    t.root = root;
    t.nleaves = l.nleaves + r.nleaves;
    return t;
}

int leaf_node(const Tree& t, int j) {
    for (int v = 0; v < (int)t.nodes.size(); ++v)
        if (t.nodes[v].leaf == j) return v;
    throw std::runtime_error("leaf index out of range");
}

static void check_colors(const Tree& t, const std::vector<Word>& colors) {
    if ((int)colors.size() != t.nleaves)
        throw std::runtime_error("tree arity mismatch: " + std::to_string(t.nleaves) +
                                 " leaves vs " + std::to_string(colors.size()) + " colors");
}

static Word comm_at(const Tree& t, const std::vector<Word>& colors, int v) {
    const auto& n = t.nodes[v];
    if (n.leaf >= 0) return colors[n.leaf];
    return word_comm(comm_at(t, colors, n.left), comm_at(t, colors, n.right));
}

Word comm_of_tree(const Tree& t, const std::vector<Word>& colors) {
    check_colors(t, colors);
    return comm_at(t, colors, t.root);
}

Word xi(const Tree& t, const std::vector<Word>& colors, int edge) {
    check_colors(t, colors);
    if (edge < 0 || edge >= (int)t.nodes.size())
        throw std::runtime_error("unknown edge");
    return comm_at(t, colors, edge);
}

Word phi(const Tree& t, const std::vector<Word>& colors, const Word& h, int edge) {
    check_colors(t, colors);
    if (edge < 0 || edge >= (int)t.nodes.size())
        throw std::runtime_error("unknown edge");
    if (edge == t.root) return h;
    int v = t.nodes[edge].parent;
    Word up = phi(t, colors, h, v); // the edge with terminal vertex v is node v itself
    bool on_left = (t.nodes[v].left == edge);
    if (on_left) {
        Word tl = comm_at(t, colors, edge);
        Word tr = comm_at(t, colors, t.nodes[v].right);
        return word_comm(up, word_conj(word_inv(tr), tl));
    }
    Word tl = comm_at(t, colors, t.nodes[v].left);
    Word tr = comm_at(t, colors, edge);
    return word_comm(word_conj(up, word_inv(tl)), word_conj(tl, tr));
}

Word phi_leaf(const Tree& t, const std::vector<Word>& colors, const Word& h, int j) {
    return phi(t, colors, h, leaf_node(t, j));
}

namespace {

// Rebuild the root component of the cut at `edge`, replacing the subtree
// below it by a single leaf.
struct Pruner {
    const Tree& t;
    const std::vector<Word>& colors;
    int edge;
    Word cut_color;
    std::vector<Word> out_colors;
    int cut_leaf = -1;

    Tree build(int v) {
        if (v == edge) {
            cut_leaf = (int)out_colors.size();
            out_colors.push_back(cut_color);
            return tree_leaf();
        }
        const auto& n = t.nodes[v];
        if (n.leaf >= 0) {
            out_colors.push_back(colors[n.leaf]);
            return tree_leaf();
        }
        Tree l = build(n.left);
        Tree r = build(n.right);
        return tree_join(l, r);
    }
};

} // namespace

Pruned prune(const Tree& t, const std::vector<Word>& colors, int edge) {
    check_colors(t, colors);
    if (edge < 0 || edge >= (int)t.nodes.size())
        throw std::runtime_error("unknown edge");
    if (t.is_leaf(edge)) return {t, colors, edge};
    Pruner p{t, colors, edge, xi(t, colors, edge), {}, -1};
    Tree r = p.build(t.root);
    return {r, p.out_colors, leaf_node(r, p.cut_leaf)};
}

namespace {

struct TreeParser {
    const std::string& s;
    size_t pos = 0;
    std::vector<std::string>& tokens;

    [[noreturn]] void fail(const std::string& what) {
        throw std::runtime_error("tree parse error at position " + std::to_string(pos) +
                                 ": " + what);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    Tree parse() {
        skip_ws();
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            Tree l = parse();
            skip_ws();
            if (pos >= s.size() || s[pos] != ',') fail("expected ','");
            ++pos;
            Tree r = parse();
            skip_ws();
            if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
            ++pos;
            return tree_join(l, r);
        }
        size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected leaf token or '['");
        tokens.push_back(s.substr(start, pos - start));
        return tree_leaf();
    }
};

} // namespace

Tree parse_tree(const std::string& s, std::vector<std::string>& leaf_tokens) {
    TreeParser p{s, 0, leaf_tokens};
    Tree t = p.parse();
    p.skip_ws();
    if (p.pos != s.size()) p.fail("trailing input");
    return t;
}

LetterTree lyndon_tree(const Monomial& w) {
    if (w.size() == 1)
        return {tree_leaf(), {static_cast<Letter>(w[0])}};
    auto [u, v] = standard_factorization(w);
    LetterTree l = lyndon_tree(u);
    LetterTree r = lyndon_tree(v);
    LetterTree out;
    out.tree = tree_join(l.tree, r.tree);
    out.letters = l.letters;
    out.letters.insert(out.letters.end(), r.letters.begin(), r.letters.end());
    return out;
}

Tree random_tree(std::mt19937_64& rng, int m) {
    if (m <= 1) return tree_leaf();
    std::uniform_int_distribution<int> dist(1, m - 1);
    int l = dist(rng);
    Tree a = random_tree(rng, l);
    Tree b = random_tree(rng, m - l);
    return tree_join(a, b);
}

static std::string tree_str_at(const Tree& t, const std::vector<std::string>& names, int v) {
    const auto& n = t.nodes[v];
    if (n.leaf >= 0) return names[n.leaf];
    return "[" + tree_str_at(t, names, n.left) + "," + tree_str_at(t, names, n.right) + "]";
}

std::string tree_str(const Tree& t, const std::vector<std::string>& leaf_names) {
    return tree_str_at(t, leaf_names, t.root);
}

} // namespace gdt
