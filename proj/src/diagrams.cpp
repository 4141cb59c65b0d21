#include "gdt/diagrams.hpp"

#include <stdexcept>

namespace gdt {

bool HElement::is_zero() const { return val.empty(); }

void HElement::add_term(Letter h, const LieElement& x) {
    auto it = val.find(h);
    if (it == val.end()) {
        if (!x.coeffs.empty()) val.emplace(h, x);
        return;
    }
    it->second += x;
    if (it->second.coeffs.empty()) val.erase(it);
}

bool HElement::is_integral() const {
    for (const auto& [h, x] : val)
        if (!x.is_integral()) return false;
    return true;
}

HElement& HElement::operator+=(const HElement& o) {
    for (const auto& [h, x] : o.val) add_term(h, x);
    return *this;
}

HElement& HElement::operator-=(const HElement& o) {
    for (const auto& [h, x] : o.val) add_term(h, Rational(-1) * x);
    return *this;
}

HElement operator*(const Rational& c, HElement x) {
    if (c == 0) { x.val.clear(); return x; }
    for (auto& [h, v] : x.val) v = c * v;
    return x;
}

bool operator==(const HElement& x, const HElement& y) {
    if (x.val.size() != y.val.size()) return false;
    for (const auto& [h, v] : x.val) {
        auto it = y.val.find(h);
        if (it == y.val.end() || !(it->second.coeffs == v.coeffs)) return false;
    }
    return true;
}

std::string to_string(const HElement& x) {
    if (x.val.empty()) return "0";
    std::string out;
    for (const auto& [h, v] : x.val) {
        if (!out.empty()) out += "  +  ";
        out += letter_name(h) + " (x) (" + to_string(v) + ")";
    }
    return out;
}

LieElement h_contraction(const HElement& x) {
    LieElement out(x.genus, x.j + 2);
    for (const auto& [h, v] : x.val) {
        LieElement gen(x.genus, 1);
        gen.add_term(Monomial(1, static_cast<char>(h)), 1);
        out += lie_bracket(gen, v, x.j + 2);
    }
    return out;
}

namespace {

// Recursive helpers carrying genus explicitly.
struct Gluer {
    const LetterTree& lt;
    const LieElement& other; // bracket of the other tree
    int genus;
    int trunc;

    LieElement down(int node) const {
        const Tree::Node& nd = lt.tree.nodes[node];
        if (nd.leaf >= 0) {
            LieElement x(genus, trunc);
            x.add_term(Monomial(1, static_cast<char>(lt.letters[nd.leaf])), 1);
            return x;
        }
        return lie_bracket(down(nd.left), down(nd.right), trunc);
    }

    // Bracket read off from the tree re-rooted at `node`, walking toward the
    // old root; the other tree hangs off the old root. At each internal
    // vertex the cyclic order (parent, left, right) is preserved, so entering
    // through the left child reads [right-subtree, above(parent)] and
    // entering through the right child reads [above(parent), left-subtree].
    LieElement above(int node) const {
        if (node == lt.tree.root) return other;
        int p = lt.tree.nodes[node].parent;
        const Tree::Node& pn = lt.tree.nodes[p];
        if (pn.left == node) return lie_bracket(down(pn.right), above(p), trunc);
        return lie_bracket(above(p), down(pn.left), trunc);
    }
};

int homogeneous_degree(const LieElement& x, const char* who) {
    if (x.coeffs.empty()) return 0;
    std::size_t d = x.coeffs.begin()->first.size();
    for (const auto& [m, c] : x.coeffs)
        if (m.size() != d)
            throw std::invalid_argument(std::string(who) + ": argument not homogeneous");
    return static_cast<int>(d);
}

void glue_one_side(HElement& out, const LieElement& x, const LieElement& y, int trunc) {
    for (const auto& [wx, cx] : x.coeffs) {
        LetterTree ltx = lyndon_tree(wx);
        for (const auto& [wy, cy] : y.coeffs) {
            LieElement ycomm(x.genus, trunc);
            ycomm.add_term(wy, 1);
            Gluer g{ltx, ycomm, x.genus, trunc};
            for (int j = 0; j < ltx.tree.nleaves; ++j) {
                int v = leaf_node(ltx.tree, j);
                out.add_term(ltx.letters[j], (cx * cy) * g.above(v));
            }
        }
    }
}

constexpr int kTauDualSign = 1;

// omega-duality H -> H: phi in Hom(H, L) with parts T_h becomes
// sum_i a_i (x) s T_{b_i} - b_i (x) s T_{a_i}.
HElement dualize(int genus, int j, const std::vector<LieElement>& parts) {
    HElement out(genus, j);
    for (int i = 1; i <= genus; ++i) {
        out.add_term(a_gen(i), Rational(kTauDualSign) * parts[b_gen(i)]);
        out.add_term(b_gen(i), Rational(-kTauDualSign) * parts[a_gen(i)]);
    }
    return out;
}

} // namespace

HElement glue(const LieElement& x, const LieElement& y) {
    if (x.genus != y.genus) throw std::invalid_argument("glue: genus mismatch");
    int k = homogeneous_degree(x, "glue");
    int l = homogeneous_degree(y, "glue");
    HElement out(x.genus, (k && l) ? k + l - 2 : 1);
    if (!k || !l) return out;
    glue_one_side(out, x, y, k + l - 1);
    glue_one_side(out, y, x, k + l - 1);
    return out;
}

HElement tau(const Expansion& theta, const Automorphism& f, int j) {
    if (johnson_depth(f) < j)
        throw std::invalid_argument("tau: automorphism is not in the j-th filtration step");
    if (j + 1 > f.trunc)
        throw std::invalid_argument("tau: truncation too small for this j");
    std::vector<LieElement> parts;
    for (Letter h = 0; h < 2 * theta.genus; ++h) {
        Word x{word_letter(h)};
        TensorSeries g =
            f.apply(theta.expand_word(x)) * theta.expand_word(word_inv(x));
        ToLyndonResult r = to_lyndon(t_log(g).graded_part(j + 1));
        if (!r.ok())
            throw std::runtime_error("tau: degree-" + std::to_string(j + 1) +
                                     " part is not a Lie element");
        parts.push_back(r.lie);
    }
    return dualize(theta.genus, j, parts);
}

std::vector<HElement> log_components(const Expansion& theta, const Automorphism& f) {
    const int n = 2 * theta.genus;
    std::vector<TensorSeries> lambda;
    for (Letter h = 0; h < n; ++h) {
        TensorSeries e = f.images[h] - TensorSeries::gen(f.genus, f.trunc, h);
        TensorSeries term = e, acc = e;
        for (int m = 2; m <= f.trunc && !term.is_zero(); ++m) {
            term = f.apply(term) - term; // E^m(h), E(s) = f(s) - s
            acc += Rational((m % 2) ? 1 : -1, m) * term;
        }
        lambda.push_back(acc);
    }
    std::vector<HElement> out;
    for (int j = 1; j <= f.trunc - 1; ++j) {
        std::vector<LieElement> parts;
        for (Letter h = 0; h < n; ++h) {
            ToLyndonResult r = to_lyndon(lambda[h].graded_part(j + 1));
            if (!r.ok())
                throw std::runtime_error("log_components: non-Lie component at degree " +
                                         std::to_string(j + 1));
            parts.push_back(r.lie);
        }
        out.push_back(dualize(theta.genus, j, parts));
    }
    return out;
}

long long h_dim(int j, int genus) {
    return 2LL * genus * witt_number(2 * genus, j + 1) - witt_number(2 * genus, j + 2);
}

namespace {

using SparseVec = std::map<std::pair<Letter, Monomial>, Rational>;

SparseVec to_vec(const HElement& x) {
    SparseVec v;
    for (const auto& [h, lie] : x.val)
        for (const auto& [m, c] : lie.coeffs) v[{h, m}] = c;
    return v;
}

// Incremental exact echelon insertion; returns true if the vector enlarged
// the span.
bool echelon_insert(std::vector<SparseVec>& rows, SparseVec v) {
    for (const SparseVec& r : rows) {
        auto it = v.find(r.begin()->first);
        if (it == v.end()) continue;
        Rational c = it->second;
        for (const auto& [key, rc] : r) {
            Rational& x = v[key];
            x -= c * rc;
            if (x == 0) v.erase(key);
        }
    }
    if (v.empty()) return false;
    Rational lead = v.begin()->second;
    for (auto& [key, c] : v) c /= lead;
    rows.push_back(std::move(v));
    return true;
}

LieElement basis_elt(int genus, const Monomial& w, int trunc) {
    LieElement x(genus, trunc);
    x.add_term(w, 1);
    return x;
}

} // namespace

int h_rank(int j, int genus) {
    std::vector<SparseVec> rows;
    if (j % 2 == 1) {
        int k = (j + 1) / 2; // j = 2k - 1
        auto lo = lyndon_words(genus, k), hi = lyndon_words(genus, k + 1);
        for (const Monomial& wx : lo)
            for (const Monomial& wy : hi)
                echelon_insert(rows, to_vec(glue(basis_elt(genus, wx, k),
                                                 basis_elt(genus, wy, k + 1))));
    } else {
        int k = (j + 2) / 2; // j = 2k - 2
        auto words = lyndon_words(genus, k);
        for (std::size_t s = 0; s < words.size(); ++s)
            for (std::size_t t = s; t < words.size(); ++t)
                echelon_insert(rows, to_vec(glue(basis_elt(genus, words[s], k),
                                                 basis_elt(genus, words[t], k))));
    }
    return static_cast<int>(rows.size());
}

} // namespace gdt
