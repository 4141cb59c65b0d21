#include "gdt/lyndon.hpp"

#include <cctype>
#include <stdexcept>

namespace gdt {

std::vector<Monomial> lyndon_words(int genus, int d) {
    // Duval's algorithm, keeping words of length exactly d.
    int n = 2 * genus;
    std::vector<Monomial> out;
    std::string w(1, char(0));
    while (!w.empty()) {
        if ((int)w.size() == d) out.push_back(w);
        // extend periodically to length d, then increment
        std::string t = w;
        while ((int)t.size() < d) t += t[t.size() % w.size()];
        while (!t.empty() && t.back() == char(n - 1)) t.pop_back();
        if (!t.empty()) t.back() = char(t.back() + 1);
        w = t;
    }
    return out;
}

bool is_lyndon(const Monomial& w) {
    if (w.empty()) return false;
    for (size_t i = 1; i < w.size(); ++i)
        if (w.substr(i) <= w) return false;
    return true;
}

std::pair<Monomial, Monomial> standard_factorization(const Monomial& w) {
    if (w.size() < 2) throw std::runtime_error("standard_factorization: length < 2");
    size_t best = 1;
    for (size_t i = 2; i < w.size(); ++i)
        if (w.substr(i) < w.substr(best)) best = i;
    return {w.substr(0, best), w.substr(best)};
}

long witt_number(int n, int d) {
    // (1/d) sum_{e|d} mu(e) n^{d/e}
    auto mobius = [](int m) {
        int result = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                result = -result;
            }
        }
        if (m > 1) result = -result;
        return result;
    };
    long total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = mobius(e);
        if (mu == 0) continue;
        long p = 1;
        for (int i = 0; i < d / e; ++i) p *= n;
        total += mu * p;
    }
    return total / d;
}

const TensorSeries& lyndon_bracket_expansion(int genus, const Monomial& w) {
    static std::map<std::pair<int, Monomial>, TensorSeries> cache;
    auto key = std::make_pair(genus, w);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TensorSeries val;
    if (w.size() == 1) {
        val = TensorSeries::gen(genus, 1, static_cast<Letter>(w[0]));
    } else {
        auto [u, v] = standard_factorization(w);
        TensorSeries eu = lyndon_bracket_expansion(genus, u).truncated((int)w.size());
        TensorSeries ev = lyndon_bracket_expansion(genus, v).truncated((int)w.size());
        val = t_bracket(eu, ev);
    }
    return cache.emplace(std::move(key), std::move(val)).first->second;
}

std::string lyndon_bracket_str(const Monomial& w) {
    if (w.size() == 1) return letter_name(static_cast<Letter>(w[0]));
    auto [u, v] = standard_factorization(w);
    return "[" + lyndon_bracket_str(u) + "," + lyndon_bracket_str(v) + "]";
}

int LieElement::low_degree() const {
    int low = trunc + 1;
    for (const auto& [w, c] : coeffs) low = std::min<int>(low, (int)w.size());
    return low;
}

void LieElement::add_term(const Monomial& w, const Rational& c) {
    if ((int)w.size() > trunc || c == 0) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

LieElement LieElement::graded_part(int d) const {
    LieElement r(genus, trunc);
    for (const auto& [w, c] : coeffs)
        if ((int)w.size() == d) r.coeffs.emplace(w, c);
    return r;
}

bool LieElement::is_integral() const {
    for (const auto& [w, c] : coeffs)
        if (!is_integer(c)) return false;
    return true;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (genus != o.genus) throw std::runtime_error("genus mismatch");
    trunc = std::min(trunc, o.trunc);
    std::erase_if(coeffs, [&](const auto& kv) { return (int)kv.first.size() > trunc; });
    for (const auto& [w, c] : o.coeffs) add_term(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (genus != o.genus) throw std::runtime_error("genus mismatch");
    trunc = std::min(trunc, o.trunc);
    std::erase_if(coeffs, [&](const auto& kv) { return (int)kv.first.size() > trunc; });
    for (const auto& [w, c] : o.coeffs) add_term(w, -c);
    return *this;
}

LieElement operator*(const Rational& c, LieElement x) {
    if (c == 0) {
        x.coeffs.clear();
        return x;
    }
    for (auto& [w, v] : x.coeffs) v *= c;
    return x;
}

TensorSeries from_lyndon(const LieElement& x, int trunc) {
    TensorSeries r(x.genus, trunc);
    for (const auto& [w, c] : x.coeffs) {
        if ((int)w.size() > trunc) continue;
        for (const auto& [m, v] : lyndon_bracket_expansion(x.genus, w).terms)
            r.add_term(m, c * v);
    }
    return r;
}

ToLyndonResult to_lyndon(const TensorSeries& u) {
    ToLyndonResult res;
    res.lie = LieElement(u.genus, u.trunc);
    res.residue = TensorSeries(u.genus, u.trunc);
    for (int d = 0; d <= u.trunc; ++d) {
        TensorSeries part = u.graded_part(d);
        if (d == 0) {
            res.residue += part;
            continue;
        }
        // The standard bracketing of a Lyndon word w expands as w plus
        // lexicographically greater monomials of the same degree, so greedy
        // elimination from the smallest monomial is triangular.
        while (!part.is_zero()) {
            auto it = part.terms.begin();
            if (!is_lyndon(it->first)) {
                res.residue.add_term(it->first, it->second);
                part.terms.erase(it);
                continue;
            }
            Monomial w = it->first;
            Rational c = it->second;
            res.lie.add_term(w, c);
            for (const auto& [m, v] : lyndon_bracket_expansion(u.genus, w).terms)
                part.add_term(m, -c * v);
        }
    }
    return res;
}

LieElement lie_bracket(const LieElement& x, const LieElement& y, int trunc) {
    TensorSeries t = t_bracket(from_lyndon(x, trunc), from_lyndon(y, trunc));
    ToLyndonResult r = to_lyndon(t);
    if (!r.ok()) throw std::runtime_error("lie_bracket: non-Lie residue");
    return r.lie;
}

LieElement omega_bivector(int genus) {
    LieElement w(genus, 2);
    for (int i = 1; i <= genus; ++i) {
        Monomial m;
        m += static_cast<char>(a_gen(i));
        m += static_cast<char>(b_gen(i));
        w.add_term(m, -1);
    }
    return w;
}

std::string to_string(const LieElement& x) {
    if (x.is_zero()) return "0";
    // order by degree, then lexicographically
    std::vector<std::pair<Monomial, Rational>> items(x.coeffs.begin(), x.coeffs.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& p, const auto& q) {
        return p.first.size() < q.first.size();
    });
    std::string s;
    bool first = true;
    for (const auto& [w, c] : items) {
        Rational a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) s += rat_str(a) + " ";
        s += lyndon_bracket_str(w);
    }
    return s;
}

namespace {

struct LieParser {
    const std::string& text;
    size_t pos = 0;
    int genus;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what);
    }

    // bracket := letter | '[' bracket ',' bracket ']' ; returns tensor expansion
    TensorSeries bracket(int trunc) {
        skip_ws();
        if (pos < text.size() && text[pos] == '[') {
            ++pos;
            TensorSeries l = bracket(trunc);
            skip_ws();
            if (pos >= text.size() || text[pos] != ',') fail("expected ','");
            ++pos;
            TensorSeries r = bracket(trunc);
            skip_ws();
            if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
            ++pos;
            return t_bracket(l, r);
        }
        size_t start = pos;
        while (pos < text.size() && (std::isalnum((unsigned char)text[pos]))) ++pos;
        if (pos == start) fail("expected letter or '['");
        Letter h = parse_letter(text.substr(start, pos - start), genus);
        return TensorSeries::gen(genus, trunc, h);
    }

    bool parse_rational(Rational& out) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) return false;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            if (pos == dstart) fail("expected denominator");
        }
        out = Rational(text.substr(start, pos - start));
        out.canonicalize();
        return true;
    }
};

} // namespace

LieElement parse_lie(const std::string& text, int genus) {
    // generous truncation bound: number of characters is >= total degree
    int trunc = std::max<int>(1, (int)text.size());
    LieParser p{text, 0, genus};
    TensorSeries total(genus, trunc);
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= p.text.size()) {
            if (first) p.fail("empty expression");
            break;
        }
        Rational sign = 1;
        if (p.text[p.pos] == '+' || p.text[p.pos] == '-') {
            if (p.text[p.pos] == '-') sign = -1;
            ++p.pos;
        } else if (!first) {
            p.fail("expected '+' or '-'");
        }
        Rational coeff = 1;
        Rational r;
        if (p.parse_rational(r)) {
            coeff = r;
            p.skip_ws();
            if (p.pos < p.text.size() && p.text[p.pos] == '*') ++p.pos;
        }
        TensorSeries term = p.bracket(trunc);
        total += (sign * coeff) * term;
        first = false;
    }
    ToLyndonResult res = to_lyndon(total);
    if (!res.ok()) throw std::runtime_error("parse_lie: expression is not a Lie element");
    // tighten truncation to the actual top degree
    int top = 0;
    for (const auto& [w, c] : res.lie.coeffs) top = std::max<int>(top, (int)w.size());
    LieElement out(genus, std::max(1, top));
    for (const auto& [w, c] : res.lie.coeffs) out.add_term(w, c);
    return out;
}

} // namespace gdt
