#include "gdt/twist.hpp"

#include <stdexcept>

namespace gdt {

Automorphism::Automorphism(int genus_, int trunc_) : genus(genus_), trunc(trunc_) {
    images.reserve(2 * genus);
    for (Letter h = 0; h < 2 * genus; ++h)
        images.push_back(TensorSeries::gen(genus, trunc, h));
}

TensorSeries Automorphism::apply(const TensorSeries& s) const {
    TensorSeries out(genus, trunc);
    for (const auto& [m, c] : s.terms) {
        if (static_cast<int>(m.size()) > trunc) continue;
        TensorSeries cur = TensorSeries::unit(genus, trunc);
        for (char ch : m) cur = cur * images[static_cast<Letter>(ch)];
        out += c * cur;
    }
    return out;
}

Automorphism identity_aut(int genus, int trunc) { return Automorphism(genus, trunc); }

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (f.genus != g.genus) throw std::invalid_argument("compose: genus mismatch");
    Automorphism h(f.genus, std::min(f.trunc, g.trunc));
    for (Letter x = 0; x < 2 * f.genus; ++x) h.images[x] = f.apply(g.images[x]);
    return h;
}

Automorphism invert(const Automorphism& f) {
    const int n = 2 * f.genus;
    // Exact inversion of the linear part by Gauss-Jordan elimination.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, 0));
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row) {
            Monomial m(1, static_cast<char>(row));
            aug[row][col] = f.images[col].coeff(m);
        }
    for (int i = 0; i < n; ++i) aug[i][n + i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (aug[row][col] != 0) { piv = row; break; }
        if (piv < 0) throw std::invalid_argument("invert: linear part is singular");
        std::swap(aug[col], aug[piv]);
        Rational p = aug[col][col];
        for (int j = 0; j < 2 * n; ++j) aug[col][j] /= p;
        for (int row = 0; row < n; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            Rational q = aug[row][col];
            for (int j = 0; j < 2 * n; ++j) aug[row][j] -= q * aug[col][j];
        }
    }
    Automorphism v(f.genus, f.trunc);
    for (Letter h = 0; h < n; ++h) {
        TensorSeries img(f.genus, f.trunc);
        for (int i = 0; i < n; ++i)
            if (aug[i][n + h] != 0)
                img.add_term(Monomial(1, static_cast<char>(i)), aug[i][n + h]);
        v.images[h] = img;
    }
    // Newton refinement: if f o v = id + E with E of low degree d, replacing
    // v(h) by v(h) - v(E(h)) pushes the error past degree d.
    for (int iter = 0; iter <= f.trunc; ++iter) {
        Automorphism w = compose(f, v);
        bool done = true;
        std::vector<TensorSeries> err(n);
        for (Letter h = 0; h < n; ++h) {
            err[h] = w.images[h] - TensorSeries::gen(f.genus, f.trunc, h);
            if (!err[h].is_zero()) done = false;
        }
        if (done) return v;
        for (Letter h = 0; h < n; ++h) v.images[h] -= v.apply(err[h]);
    }
    throw std::runtime_error("invert: Newton iteration failed to converge (internal)");
}

TensorSeries aut_apply_word(const Automorphism& f, const Expansion& theta, const Word& x) {
    return f.apply(theta.expand_word(x));
}

LieElement aut_apply_lie(const Automorphism& f, const LieElement& x) {
    ToLyndonResult r = to_lyndon(f.apply(from_lyndon(x, f.trunc)));
    if (!r.ok())
        throw std::runtime_error("aut_apply_lie: image is not a Lie element");
    return r.lie;
}

int johnson_depth(const Automorphism& f) {
    int d = f.trunc + 1;
    for (Letter h = 0; h < 2 * f.genus; ++h) {
        TensorSeries diff = f.images[h] - TensorSeries::gen(f.genus, f.trunc, h);
        d = std::min(d, diff.low_degree());
    }
    return std::min(d - 1, f.trunc - 1);
}

CyclicSeries l_gamma(const Expansion& theta, const Word& gamma) {
    TensorSeries l = t_log(theta.expand_word(gamma));
    return cyclic_project(Rational(1, 2) * (l * l));
}

TensorSeries Derivation::apply(const TensorSeries& s) const {
    TensorSeries out(genus, trunc);
    for (const auto& [m, c] : s.terms) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const TensorSeries& img = images[static_cast<Letter>(m[i])];
            for (const auto& [m2, c2] : img.terms) {
                if (static_cast<int>(m.size() - 1 + m2.size()) > trunc) continue;
                out.add_term(m.substr(0, i) + m2 + m.substr(i + 1), c * c2);
            }
        }
    }
    return out;
}

Derivation s_derivation(const CyclicSeries& c) {
    Derivation d;
    d.genus = c.genus;
    d.trunc = c.trunc - 1;
    d.images.assign(2 * c.genus, TensorSeries(c.genus, d.trunc));
    for (const auto& [m, q] : c.terms) {
        if (static_cast<int>(m.size()) - 1 > d.trunc) continue;
        for (std::size_t i = 0; i < m.size(); ++i) {
            Letter hi = static_cast<Letter>(m[i]);
            for (Letter h = 0; h < 2 * c.genus; ++h) {
                int w = omega_pair(hi, h);
                if (w == 0) continue;
                d.images[h].add_term(m.substr(i + 1) + m.substr(0, i), w * q);
            }
        }
    }
    int low = d.trunc + 1;
    for (const auto& img : d.images) low = std::min(low, img.low_degree());
    d.d0 = std::max(0, low - 1);
    return d;
}

Automorphism exp_derivation(const Derivation& d, int trunc) {
    if (d.d0 < 1)
        throw std::invalid_argument("exp_derivation: derivation must raise degree");
    Automorphism f(d.genus, trunc);
    Derivation dt = d;
    dt.trunc = trunc;
    for (Letter h = 0; h < 2 * d.genus; ++h) {
        TensorSeries term = TensorSeries::gen(d.genus, trunc, h);
        TensorSeries acc = term;
        for (int n = 1; n <= trunc && !term.is_zero(); ++n) {
            term = Rational(1, n) * dt.apply(term);
            acc += term;
        }
        f.images[h] = acc;
    }
    return f;
}

Automorphism dehn_twist(const Expansion& theta, const Word& gamma, int k, int eps) {
    if (k < 2) throw std::invalid_argument("gdt: need k >= 2");
    if (lcs_class(gamma, theta.genus, k) < k)
        throw std::invalid_argument("gdt: word is not in Gamma_" + std::to_string(k));
    Derivation d = s_derivation(l_gamma(theta, gamma));
    for (auto& img : d.images) img = Rational(eps) * img;
    return exp_derivation(d, theta.trunc - 1);
}

AlgElement gdt_group_delta(PairingContext& P, const CommutatorExpression& decomp,
                           const Word& x, int eps) {
    AlgElement delta;
    for (const TreeTerm& t : decomp.terms) {
        for (int j = 0; j < t.tree.nleaves; ++j) {
            Word lam = phi_leaf(t.tree, t.colors, decomp.gamma, j);
            AlgElement lam1 = AlgElement(lam) - AlgElement::unit();
            if (lam1.is_zero()) continue;
            BiElement kt = P.kappa_tilde(t.colors[j], x);
            delta += Rational(eps) * diamond_app(kt, lam1);
        }
    }
    return delta;
}

AlgElement gdt_group_delta_coarse(PairingContext& P, const Word& gamma, const Word& x,
                                  int eps) {
    AlgElement g1 = AlgElement(gamma) - AlgElement::unit();
    return Rational(eps) * diamond_app(P.kappa_tilde(gamma, x), g1);
}

TensorSeries gdt_group_class(const Expansion& theta, const AlgElement& delta,
                             const Word& x, int trunc) {
    // Only degrees <= trunc survive, so expand at that truncation.
    Expansion th = theta;
    if (trunc < th.trunc) {
        th.trunc = trunc;
        th.clear_cache();
        for (auto& s : th.log_images) s = s.truncated(trunc);
    }
    TensorSeries u = TensorSeries::unit(th.genus, th.trunc) + th.expand_alg(delta);
    return (u * th.expand_word(x)).truncated(trunc);
}

std::string serialize(const Automorphism& f) {
    std::string out = "gdt-automorphism 1\ngenus " + std::to_string(f.genus) +
                      "\ntrunc " + std::to_string(f.trunc) + "\n";
    for (Letter h = 0; h < 2 * f.genus; ++h)
        for (const auto& [m, c] : f.images[h].terms)
            out += "image " + letter_name(h) + " " + (m.empty() ? "-" : monomial_str(m)) +
                   " " + rat_str(c) + "\n";
    out += "end\n";
    return out;
}

} // namespace gdt
