#pragma once

#include "gdt/word.hpp"

#include <string>

namespace gdt {

// Element of Q[pi] (x) Q[pi]: finite map (word, word) -> nonzero rational.
class BiElement {
public:
    std::map<std::pair<Word, Word>, Rational> terms;

    BiElement() = default;
    BiElement(const Word& p, const Word& q, const Rational& c = 1) { add_term(p, q, c); }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& p, const Word& q, const Rational& c);

    BiElement& operator+=(const BiElement& o);
    BiElement& operator-=(const BiElement& o);
    friend BiElement operator+(BiElement x, const BiElement& y) { return x += y; }
    friend BiElement operator-(BiElement x, const BiElement& y) { return x -= y; }
    friend BiElement operator*(const Rational& c, BiElement x);
    friend bool operator==(const BiElement& x, const BiElement& y) {
        return x.terms == y.terms;
    }
};

// Componentwise products in A (x) A: (w (x) 1) * K, K * (w (x) 1), etc.
BiElement pre1(const Word& w, const BiElement& k);  // (w x 1) K
BiElement post1(const Word& w, const BiElement& k); // K (w x 1)
BiElement pre2(const Word& w, const BiElement& k);  // (1 x w) K
BiElement post2(const Word& w, const BiElement& k); // K (1 x w)

// a <> b = a'b' (x) b''a'' ; a <> c = a' c a''.
BiElement diamond(const BiElement& a, const BiElement& b);
AlgElement diamond_app(const BiElement& a, const AlgElement& c);

std::string to_string(const BiElement& b);

// kappa values on ordered pairs of positive generators (the frozen base data
// of the Fox pairing; everything else is computed by the product rules).
class PairingTable {
public:
    int genus = 1;
    std::vector<std::vector<BiElement>> entry; // [2g][2g]

    static PairingTable standard(int genus);
    std::string dump() const;
    static PairingTable load(const std::string& text);
    friend bool operator==(const PairingTable& x, const PairingTable& y) {
        return x.genus == y.genus && x.entry == y.entry;
    }
};

// Recursive kappa/kappa-tilde/sigma evaluation over a fixed table, with
// memoization on word pairs.
class PairingContext {
public:
    explicit PairingContext(PairingTable t) : table(std::move(t)) {}
    explicit PairingContext(int genus) : table(PairingTable::standard(genus)) {}

    PairingTable table;

    const BiElement& kappa_words(const Word& u, const Word& v);
    BiElement kappa(const AlgElement& u, const AlgElement& v);
    // kappa~(alpha, beta) = (1 x beta^-1) <> kappa(alpha,beta) <> (alpha^-1 x 1)
    BiElement kappa_tilde(const Word& alpha, const Word& beta);
    // sigma(|u|)(v) = kappa'(u,v) kappa''(u,v)
    AlgElement sigma_app(const AlgElement& u, const AlgElement& v);

private:
    std::map<std::pair<Word, Word>, BiElement> memo_;
};

} // namespace gdt
