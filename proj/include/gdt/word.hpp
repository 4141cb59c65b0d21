#pragma once

#include "gdt/basis.hpp"
#include "gdt/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gdt {

// Freely reduced word in the generators alpha_1,beta_1,...,alpha_g,beta_g.
// A letter is a nonzero int: +(h+1) for generator with basis letter h,
// -(h+1) for its inverse. The empty word is the identity.
using Word = std::vector<int>;

inline int word_letter(Letter h, bool inverse = false) {
    return inverse ? -(h + 1) : (h + 1);
}
inline Letter letter_of(int wl) { return (wl > 0 ? wl : -wl) - 1; }

Word word_reduce(const Word& w);
Word word_mul(const Word& x, const Word& y);
Word word_inv(const Word& x);
// x^y = y x y^-1
Word word_conj(const Word& x, const Word& y);
// [x,y] = x y x^-1 y^-1
Word word_comm(const Word& x, const Word& y);

// zeta = prod_{i=1}^g [alpha_i, beta_i], the boundary word.
Word zeta_word(int genus);

std::string word_str(const Word& w);
// Grammar: tokens "a1 b2 A1" (uppercase = inverse), whitespace optional.
Word parse_word(const std::string& s, int genus);

// Element of the group algebra Q[pi]: finite map word -> nonzero rational.
class AlgElement {
public:
    std::map<Word, Rational> terms;

    AlgElement() = default;
    explicit AlgElement(const Word& w) { terms.emplace(w, 1); }

    static AlgElement unit() { return AlgElement(Word()); }

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& w, const Rational& c);

    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    friend AlgElement operator+(AlgElement x, const AlgElement& y) { return x += y; }
    friend AlgElement operator-(AlgElement x, const AlgElement& y) { return x -= y; }
    friend AlgElement operator*(const AlgElement& x, const AlgElement& y);
    friend AlgElement operator*(const Rational& c, AlgElement x);
    friend bool operator==(const AlgElement& x, const AlgElement& y) {
        return x.terms == y.terms;
    }
};

std::string to_string(const AlgElement& u);

} // namespace gdt
