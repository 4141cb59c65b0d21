#include "gdt/word.hpp"

#include <cctype>
#include <stdexcept>

namespace gdt {

Word word_reduce(const Word& w) {
    Word r;
    for (int x : w) {
        if (!r.empty() && r.back() == -x) r.pop_back();
        else r.push_back(x);
    }
    return r;
}

Word word_mul(const Word& x, const Word& y) {
    Word r = x;
    for (int l : y) {
        if (!r.empty() && r.back() == -l) r.pop_back();
        else r.push_back(l);
    }
    return r;
}

Word word_inv(const Word& x) {
    Word r;
    r.reserve(x.size());
    for (auto it = x.rbegin(); it != x.rend(); ++it) r.push_back(-*it);
    return r;
}

Word word_conj(const Word& x, const Word& y) {
    return word_mul(word_mul(y, x), word_inv(y));
}

Word word_comm(const Word& x, const Word& y) {
    return word_mul(word_mul(x, y), word_mul(word_inv(x), word_inv(y)));
}

Word zeta_word(int genus) {
    Word z;
    for (int i = 1; i <= genus; ++i) {
        Word a{word_letter(a_gen(i))};
        Word b{word_letter(b_gen(i))};
        z = word_mul(z, word_comm(a, b));
    }
    return z;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (int l : w) {
        Letter h = letter_of(l);
        std::string name = letter_name(h);
        if (l < 0) name[0] = (char)std::toupper((unsigned char)name[0]);
        if (!s.empty()) s += " ";
        s += name;
    }
    return s;
}

Word parse_word(const std::string& s, int genus) {
    Word w;
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace((unsigned char)s[i])) { ++i; continue; }
        char c = s[i];
        bool inverse = (c == 'A' || c == 'B');
        if (c != 'a' && c != 'b' && c != 'A' && c != 'B')
            throw std::invalid_argument("parse error: unexpected token starting at '" +
                                     s.substr(i) + "'");
        size_t j = i + 1;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i + 1)
            throw std::invalid_argument("parse error: missing index in token '" +
                                     s.substr(i) + "'");
        int idx = std::stoi(s.substr(i + 1, j - i - 1));
        if (idx < 1 || idx > genus)
            throw std::invalid_argument("parse error: index out of range in token '" +
                                     s.substr(i, j - i) + "'");
        Letter h = (c == 'a' || c == 'A') ? a_gen(idx) : b_gen(idx);
        int l = word_letter(h, inverse);
        if (!w.empty() && w.back() == -l) w.pop_back();
        else w.push_back(l);
        i = j;
    }
    return w;
}

void AlgElement::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
}

AlgElement operator*(const AlgElement& x, const AlgElement& y) {
    AlgElement r;
    for (const auto& [w1, c1] : x.terms)
        for (const auto& [w2, c2] : y.terms)
            r.add_term(word_mul(w1, w2), c1 * c2);
    return r;
}

AlgElement operator*(const Rational& c, AlgElement x) {
    if (c == 0) {
        x.terms.clear();
        return x;
    }
    for (auto& [w, v] : x.terms) v *= c;
    return x;
}

std::string to_string(const AlgElement& u) {
    if (u.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : u.terms) {
        Rational a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || w.empty()) {
            s += rat_str(a);
            if (!w.empty()) s += " ";
        }
        if (!w.empty()) s += "(" + word_str(w) + ")";
    }
    return s;
}

} // namespace gdt
