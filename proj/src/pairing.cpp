#include "gdt/pairing.hpp"

#include <sstream>
#include <stdexcept>

namespace gdt {

void BiElement::add_term(const Word& p, const Word& q, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(p, q);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

BiElement& BiElement::operator+=(const BiElement& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
    return *this;
}

BiElement& BiElement::operator-=(const BiElement& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, -c);
    return *this;
}

BiElement operator*(const Rational& c, BiElement x) {
    if (c == 0) {
        x.terms.clear();
        return x;
    }
    for (auto& [k, v] : x.terms) v *= c;
    return x;
}

BiElement pre1(const Word& w, const BiElement& k) {
    BiElement r;
    for (const auto& [t, c] : k.terms) r.add_term(word_mul(w, t.first), t.second, c);
    return r;
}

BiElement post1(const Word& w, const BiElement& k) {
    BiElement r;
    for (const auto& [t, c] : k.terms) r.add_term(word_mul(t.first, w), t.second, c);
    return r;
}

BiElement pre2(const Word& w, const BiElement& k) {
    BiElement r;
    for (const auto& [t, c] : k.terms) r.add_term(t.first, word_mul(w, t.second), c);
    return r;
}

BiElement post2(const Word& w, const BiElement& k) {
    BiElement r;
    for (const auto& [t, c] : k.terms) r.add_term(t.first, word_mul(t.second, w), c);
    return r;
}

BiElement diamond(const BiElement& a, const BiElement& b) {
    BiElement r;
    for (const auto& [ta, ca] : a.terms)
        for (const auto& [tb, cb] : b.terms)
            r.add_term(word_mul(ta.first, tb.first), word_mul(tb.second, ta.second),
                       ca * cb);
    return r;
}

AlgElement diamond_app(const BiElement& a, const AlgElement& c) {
    AlgElement r;
    for (const auto& [ta, ca] : a.terms)
        for (const auto& [w, cw] : c.terms)
            r.add_term(word_mul(word_mul(ta.first, w), ta.second), ca * cw);
    return r;
}

std::string to_string(const BiElement& b) {
    if (b.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : b.terms) {
        Rational a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) s += rat_str(a) + " ";
        s += "(" + word_str(t.first) + ") x (" + word_str(t.second) + ")";
    }
    return s;
}

PairingTable PairingTable::standard(int genus) {
    // Base values of the Fox pairing on positive generators, derived from the
    // standard one-boundary surface model (handles nested left to right, both
    // base points on the boundary). Validated by the boundary-annihilation
    // identity sigma(|u|)(zeta) = 0, which holds exactly in Q[pi].
    PairingTable t;
    t.genus = genus;
    t.entry.assign(2 * genus, std::vector<BiElement>(2 * genus));
    auto W = [](Letter h) { return Word{word_letter(h)}; };
    auto WW = [](Letter h1, Letter h2) { return Word{word_letter(h1), word_letter(h2)}; };
    for (Letter x = 0; x < 2 * genus; ++x) {
        for (Letter y = 0; y < 2 * genus; ++y) {
            BiElement& e = t.entry[x][y];
            int hi = handle_of(x), hj = handle_of(y);
            if (hi < hj) continue; // zero
            if (hi > hj) {
                e.add_term(W(x), W(y), 1);
                e.add_term(W(y), W(x), 1);
                e.add_term(WW(y, x), Word(), -1);
                e.add_term(Word(), WW(x, y), -1);
                continue;
            }
            bool xa = is_a_letter(x), ya = is_a_letter(y);
            if (xa && ya) { // kappa(a,a) = a x a - 1 x aa
                e.add_term(W(x), W(y), 1);
                e.add_term(Word(), WW(x, y), -1);
            } else if (xa && !ya) { // kappa(a,b) = b x a
                e.add_term(W(y), W(x), 1);
            } else if (!xa && ya) { // kappa(b,a) = b x a - ab x 1 - 1 x ba
                e.add_term(W(x), W(y), 1);
                e.add_term(WW(y, x), Word(), -1);
                e.add_term(Word(), WW(x, y), -1);
            } else { // kappa(b,b) = b x b - bb x 1
                e.add_term(W(x), W(y), 1);
                e.add_term(WW(x, y), Word(), -1);
            }
        }
    }
    return t;
}

std::string PairingTable::dump() const {
    std::ostringstream os;
    os << "gdt-pairing-table 1\n";
    os << "genus " << genus << "\n";
    // One line per nonzero term: "term <x> <y> <word1|-> <word2|-> <coef>",
    // words in compact grammar ("-" for the empty word).
    auto wstr = [](const Word& w) {
        if (w.empty()) return std::string("-");
        std::string s = word_str(w);
        std::erase(s, ' ');
        return s;
    };
    for (Letter x = 0; x < 2 * genus; ++x)
        for (Letter y = 0; y < 2 * genus; ++y)
            for (const auto& [t, c] : entry[x][y].terms)
                os << "term " << letter_name(x) << " " << letter_name(y) << " "
                   << wstr(t.first) << " " << wstr(t.second) << " " << rat_str(c) << "\n";
    os << "end\n";
    return os.str();
}

PairingTable PairingTable::load(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int version = 0;
    if (!(is >> tag >> version) || tag != "gdt-pairing-table" || version != 1)
        throw std::runtime_error("pairing table: bad header");
    std::string key;
    int genus = 0;
    is >> key >> genus;
    if (key != "genus" || genus < 1) throw std::runtime_error("pairing table: bad genus");
    PairingTable t;
    t.genus = genus;
    t.entry.assign(2 * genus, std::vector<BiElement>(2 * genus));
    while (is >> key) {
        if (key == "end") break;
        if (key != "term") throw std::runtime_error("pairing table: unexpected '" + key + "'");
        std::string xs, ys, w1, w2, cs;
        is >> xs >> ys >> w1 >> w2 >> cs;
        Rational c(cs);
        c.canonicalize();
        t.entry[parse_letter(xs, genus)][parse_letter(ys, genus)].add_term(
            w1 == "-" ? Word() : parse_word(w1, genus),
            w2 == "-" ? Word() : parse_word(w2, genus), c);
    }
    return t;
}

const BiElement& PairingContext::kappa_words(const Word& u, const Word& v) {
    auto key = std::make_pair(u, v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BiElement r;
    if (u.empty() || v.empty()) {
        // kappa(1, .) = kappa(., 1) = 0
    } else if (u.size() >= 2) {
        // kappa(x w, v) = (1 x x) kappa(w, v) + kappa(x, v) (w x 1)
        Word x{u[0]};
        Word w(u.begin() + 1, u.end());
        r = pre2(x, kappa_words(w, v)) + post1(w, kappa_words(x, v));
    } else if (u[0] < 0) {
        // kappa(x^-1, v) = -(1 x x^-1) kappa(x, v) (x^-1 x 1)
        Word xinv{u[0]};
        Word x{-u[0]};
        r = Rational(-1) * pre2(xinv, post1(xinv, kappa_words(x, v)));
    } else if (v.size() >= 2) {
        // kappa(u, y t) = kappa(u, y) (1 x t) + (y x 1) kappa(u, t)
        Word y{v[0]};
        Word t(v.begin() + 1, v.end());
        r = post2(t, kappa_words(u, y)) + pre1(y, kappa_words(u, t));
    } else if (v[0] < 0) {
        // kappa(u, y^-1) = -(y^-1 x 1) kappa(u, y) (1 x y^-1)
        Word yinv{v[0]};
        Word y{-v[0]};
        r = Rational(-1) * pre1(yinv, post2(yinv, kappa_words(u, y)));
    } else {
        r = table.entry[letter_of(u[0])][letter_of(v[0])];
    }
    return memo_.emplace(std::move(key), std::move(r)).first->second;
}

BiElement PairingContext::kappa(const AlgElement& u, const AlgElement& v) {
    BiElement r;
    for (const auto& [wu, cu] : u.terms)
        for (const auto& [wv, cv] : v.terms)
            r += (cu * cv) * kappa_words(wu, wv);
    return r;
}

BiElement PairingContext::kappa_tilde(const Word& alpha, const Word& beta) {
    // (1 x beta^-1) <> kappa <> (alpha^-1 x 1): per term p x q this is
    // p alpha^-1 x q beta^-1.
    BiElement r;
    Word ai = word_inv(alpha), bi = word_inv(beta);
    for (const auto& [t, c] : kappa_words(alpha, beta).terms)
        r.add_term(word_mul(t.first, ai), word_mul(t.second, bi), c);
    return r;
}

AlgElement PairingContext::sigma_app(const AlgElement& u, const AlgElement& v) {
    AlgElement r;
    for (const auto& [wu, cu] : u.terms)
        for (const auto& [wv, cv] : v.terms)
            for (const auto& [t, c] : kappa_words(wu, wv).terms)
                r.add_term(word_mul(t.first, t.second), cu * cv * c);
    return r;
}

} // namespace gdt
