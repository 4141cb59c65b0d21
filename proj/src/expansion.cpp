#include "gdt/expansion.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gdt {

Expansion::Expansion(int genus_, int trunc_) : genus(genus_), trunc(trunc_) {
    log_images.assign(2 * genus, TensorSeries(genus, trunc));
}

const TensorSeries& Expansion::gen_image(int word_letter) const {
    auto it = cache_.find(word_letter);
    if (it != cache_.end()) return it->second;
    Letter h = letter_of(word_letter);
    TensorSeries img =
        word_letter > 0 ? t_exp(log_images[h]) : t_exp(Rational(-1) * log_images[h]);
    return cache_.emplace(word_letter, std::move(img)).first->second;
}

TensorSeries Expansion::expand_word(const Word& w) const {
    TensorSeries r = TensorSeries::unit(genus, trunc);
    for (int l : w) r = r * gen_image(l);
    return r;
}

TensorSeries Expansion::expand_alg(const AlgElement& u) const {
    TensorSeries r(genus, trunc);
    for (const auto& [w, c] : u.terms) r += c * expand_word(w);
    return r;
}

void Expansion::clear_cache() const { cache_.clear(); }

Expansion standard_expansion(int genus, int trunc) {
    Expansion e(genus, trunc);
    for (Letter h = 0; h < 2 * genus; ++h)
        e.log_images[h] = TensorSeries::gen(genus, trunc, h);
    return e;
}

namespace {

// Left-normed bracketing [[...[m_1,m_2],...],m_len] of a monomial.
TensorSeries left_normed_bracket(int genus, const Monomial& m, int trunc) {
    TensorSeries r = TensorSeries::gen(genus, trunc, static_cast<Letter>(m[0]));
    for (size_t i = 1; i < m.size(); ++i)
        r = t_bracket(r, TensorSeries::gen(genus, trunc, static_cast<Letter>(m[i])));
    return r;
}

} // namespace

Expansion symplectic_expansion(int genus, int trunc) {
    if (trunc < 2) throw std::runtime_error("symplectic_expansion: trunc must be >= 2");
    Expansion e = standard_expansion(genus, trunc);
    Word zeta = zeta_word(genus);
    // target: log theta(zeta) = -omega = sum_i [a_i,b_i]
    TensorSeries target = from_lyndon(Rational(-1) * omega_bivector(genus), trunc);
    for (int n = 3; n <= trunc; ++n) {
        TensorSeries defect = t_log(e.expand_word(zeta)) - target;
        TensorSeries r_n = defect.graded_part(n);
        if (r_n.is_zero()) continue;
        // Write -r_n = sum_h [s_h, h] via the Dynkin-Specht-Wever section:
        // s_h = (1/n) sum_{monomials m = m'h} c_m * leftNormedBracket(m').
        std::vector<TensorSeries> s(2 * genus, TensorSeries(genus, trunc));
        for (const auto& [m, c] : r_n.terms) {
            Letter last = static_cast<Letter>(m.back());
            Monomial head = m.substr(0, m.size() - 1);
            s[last] += (-c / n) * left_normed_bracket(genus, head, trunc);
        }
        // A degree-(n-1) perturbation u of log theta(alpha_i) shifts
        // log theta(zeta) at degree n by [u, b_i]; similarly v on beta_i
        // contributes [a_i, v]. So take u_i = s_{b_i}, v_i = -s_{a_i}.
        for (int i = 1; i <= genus; ++i) {
            e.log_images[a_gen(i)] += s[b_gen(i)];
            e.log_images[b_gen(i)] -= s[a_gen(i)];
        }
        e.clear_cache();
        if (!(t_log(e.expand_word(zeta)) - target).graded_part(n).is_zero())
            throw std::runtime_error("symplectic_expansion: correction failed (internal)");
    }
    e.symplectic = true;
    return e;
}

TensorSeries magnus(const Word& w, int genus, int trunc) {
    return standard_expansion(genus, trunc).expand_word(w);
}

int lcs_class(const Word& w, int genus, int cutoff) {
    TensorSeries u = magnus(w, genus, cutoff);
    u.add_term(Monomial(), -1);
    if (u.is_zero()) return cutoff + 1;
    return u.low_degree();
}

LieElement leading_class(const Word& w, int genus, int k) {
    TensorSeries u = magnus(w, genus, k);
    u.add_term(Monomial(), -1);
    if (!u.is_zero() && u.low_degree() < k)
        throw std::runtime_error("leading_class: word has class " +
                                 std::to_string(u.low_degree()) + " < " + std::to_string(k));
    ToLyndonResult r = to_lyndon(u.graded_part(k));
    if (!r.ok()) throw std::runtime_error("leading_class: non-Lie leading term");
    return r.lie;
}

std::string serialize(const Expansion& e) {
    std::ostringstream os;
    os << "gdt-expansion 1\n";
    os << "genus " << e.genus << "\n";
    os << "trunc " << e.trunc << "\n";
    os << "symplectic " << (e.symplectic ? 1 : 0) << "\n";
    for (Letter h = 0; h < 2 * e.genus; ++h) {
        ToLyndonResult r = to_lyndon(e.log_images[h]);
        if (!r.ok()) throw std::runtime_error("serialize: non-primitive log image");
        for (const auto& [w, c] : r.lie.coeffs)
            os << "image " << letter_name(h) << " " << monomial_str(w) << " "
               << rat_str(c) << "\n";
    }
    os << "end\n";
    return os.str();
}

Monomial parse_monomial(const std::string& s, int genus) {
    Monomial m;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != 'a' && s[i] != 'b')
            throw std::runtime_error("bad monomial: '" + s + "'");
        size_t j = i + 1;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        m += static_cast<char>(parse_letter(s.substr(i, j - i), genus));
        i = j;
    }
    return m;
}

Expansion deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int version = 0;
    if (!(is >> tag >> version) || tag != "gdt-expansion" || version != 1)
        throw std::runtime_error("deserialize: bad header");
    std::string key;
    int genus = 0, trunc = 0, sympl = 0;
    is >> key >> genus;
    if (key != "genus") throw std::runtime_error("deserialize: expected genus");
    is >> key >> trunc;
    if (key != "trunc") throw std::runtime_error("deserialize: expected trunc");
    is >> key >> sympl;
    if (key != "symplectic") throw std::runtime_error("deserialize: expected symplectic");
    Expansion e(genus, trunc);
    e.symplectic = sympl != 0;
    std::vector<LieElement> logs(2 * genus, LieElement(genus, trunc));
    while (is >> key) {
        if (key == "end") break;
        if (key != "image") throw std::runtime_error("deserialize: unexpected '" + key + "'");
        std::string gen, mono, coef;
        is >> gen >> mono >> coef;
        Rational c(coef);
        c.canonicalize();
        logs[parse_letter(gen, genus)].add_term(parse_monomial(mono, genus), c);
    }
    for (Letter h = 0; h < 2 * genus; ++h)
        e.log_images[h] = from_lyndon(logs[h], trunc);
    return e;
}

} // namespace gdt
