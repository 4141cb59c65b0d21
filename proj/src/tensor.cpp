#include "gdt/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdt {

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (char ch : m) s += letter_name(static_cast<Letter>(ch));
    return s;
}

TensorSeries TensorSeries::unit(int genus, int trunc) {
    TensorSeries u(genus, trunc);
    u.terms[Monomial()] = 1;
    return u;
}

TensorSeries TensorSeries::gen(int genus, int trunc, Letter h) {
    TensorSeries u(genus, trunc);
    if (trunc >= 1) u.terms[Monomial(1, static_cast<char>(h))] = 1;
    return u;
}

Rational TensorSeries::coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rational(0) : it->second;
}

int TensorSeries::low_degree() const {
    int low = trunc + 1;
    for (const auto& [m, c] : terms) low = std::min<int>(low, (int)m.size());
    return low;
}

void TensorSeries::add_term(const Monomial& m, const Rational& c) {
    if ((int)m.size() > trunc || c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

TensorSeries TensorSeries::graded_part(int d) const {
    TensorSeries r(genus, trunc);
    for (const auto& [m, c] : terms)
        if ((int)m.size() == d) r.terms.emplace(m, c);
    return r;
}

TensorSeries TensorSeries::truncated(int new_trunc) const {
    TensorSeries r(genus, new_trunc);
    for (const auto& [m, c] : terms)
        if ((int)m.size() <= new_trunc) r.terms.emplace(m, c);
    return r;
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& o) {
    if (genus != o.genus) throw std::runtime_error("genus mismatch");
    trunc = std::min(trunc, o.trunc);
    std::erase_if(terms, [&](const auto& kv) { return (int)kv.first.size() > trunc; });
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& o) {
    if (genus != o.genus) throw std::runtime_error("genus mismatch");
    trunc = std::min(trunc, o.trunc);
    std::erase_if(terms, [&](const auto& kv) { return (int)kv.first.size() > trunc; });
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

TensorSeries operator*(const TensorSeries& x, const TensorSeries& y) {
    if (x.genus != y.genus) throw std::runtime_error("genus mismatch");
    TensorSeries r(x.genus, std::min(x.trunc, y.trunc));
    for (const auto& [m1, c1] : x.terms) {
        if ((int)m1.size() > r.trunc) continue;
        for (const auto& [m2, c2] : y.terms) {
            if ((int)(m1.size() + m2.size()) > r.trunc) continue;
            r.add_term(m1 + m2, c1 * c2);
        }
    }
    return r;
}

TensorSeries operator*(const Rational& c, TensorSeries x) {
    if (c == 0) {
        x.terms.clear();
        return x;
    }
    for (auto& [m, v] : x.terms) v *= c;
    return x;
}

TensorSeries t_log(const TensorSeries& u) {
    if (u.coeff(Monomial()) != 1)
        throw std::runtime_error("t_log: constant term must be 1");
    TensorSeries y = u;
    y.add_term(Monomial(), -1); // y = u - 1
    TensorSeries result(u.genus, u.trunc);
    TensorSeries power = TensorSeries::unit(u.genus, u.trunc);
    int low = std::max(1, y.low_degree());
    for (int m = 1; (long)m * low <= u.trunc; ++m) {
        power = power * y;
        Rational c(m % 2 == 1 ? 1 : -1, m);
        result += c * power;
    }
    return result;
}

TensorSeries t_exp(const TensorSeries& u) {
    if (u.coeff(Monomial()) != 0)
        throw std::runtime_error("t_exp: constant term must be 0");
    TensorSeries result = TensorSeries::unit(u.genus, u.trunc);
    TensorSeries power = TensorSeries::unit(u.genus, u.trunc);
    int low = std::max(1, u.low_degree());
    Rational fact = 1;
    for (int m = 1; (long)m * low <= u.trunc; ++m) {
        power = power * u;
        fact *= m;
        result += Rational(1) / fact * power;
    }
    return result;
}

TensorSeries bch(const TensorSeries& x, const TensorSeries& y) {
    return t_log(t_exp(x) * t_exp(y));
}

TensorSeries t_bracket(const TensorSeries& x, const TensorSeries& y) {
    return x * y - y * x;
}

std::string to_string(const TensorSeries& u) {
    if (u.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : u.terms) {
        Rational a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || m.empty()) {
            s += rat_str(a);
            if (!m.empty()) s += " ";
        }
        if (!m.empty()) s += monomial_str(m);
    }
    return s;
}

Monomial min_rotation(const Monomial& m) {
    Monomial best = m;
    Monomial cur = m;
    for (size_t i = 1; i < m.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

void CyclicSeries::add_term(const Monomial& m, const Rational& c) {
    if ((int)m.size() > trunc || c == 0) return;
    Monomial key = min_rotation(m);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

CyclicSeries cyclic_project(const TensorSeries& u) {
    CyclicSeries r(u.genus, u.trunc);
    for (const auto& [m, c] : u.terms) r.add_term(m, c);
    return r;
}

std::string to_string(const CyclicSeries& u) {
    if (u.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : u.terms) {
        Rational a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || m.empty()) {
            s += rat_str(a);
            if (!m.empty()) s += " ";
        }
        if (!m.empty()) s += "|" + monomial_str(m) + "|";
    }
    return s;
}

} // namespace gdt
