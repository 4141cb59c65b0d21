#include "gdt/checks.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gdt;

// Group-word grammar with commutator brackets: a product of factors, where a
// factor is a generator token ("a1", "B2" = inverse) or "[expr,expr]".
Word parse_group_expr(const std::string& s, int genus, std::size_t& pos);

Word parse_group_factor(const std::string& s, int genus, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of word");
    if (s[pos] == '[') {
        ++pos;
        Word l = parse_group_expr(s, genus, pos);
        if (pos >= s.size() || s[pos] != ',')
            throw std::invalid_argument("expected ',' in commutator at position " +
                                        std::to_string(pos));
        ++pos;
        Word r = parse_group_expr(s, genus, pos);
        if (pos >= s.size() || s[pos] != ']')
            throw std::invalid_argument("expected ']' at position " + std::to_string(pos));
        ++pos;
        return word_comm(l, r);
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
    if (pos == start)
        throw std::invalid_argument("unexpected character '" + std::string(1, s[pos]) +
                                    "' at position " + std::to_string(pos));
    return parse_word(s.substr(start, pos - start), genus);
}

Word parse_group_expr(const std::string& s, int genus, std::size_t& pos) {
    Word w;
    while (true) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos >= s.size() || s[pos] == ',' || s[pos] == ']') return w;
        w = word_mul(w, parse_group_factor(s, genus, pos));
    }
}

Word parse_group_word(const std::string& s, int genus) {
    std::size_t pos = 0;
    Word w = parse_group_expr(s, genus, pos);
    if (pos != s.size())
        throw std::invalid_argument("trailing input at position " + std::to_string(pos));
    return w;
}

struct RunConfig {
    int genus = 2;
    int k = 2;
    int degree = 0; // 0 = default 2k+1
    int framing = 1;
    std::string expansion = "symplectic"; // symplectic | standard | <file>
    std::string format = "text";          // text | structured
    std::uint64_t seed = 1;

    int trunc() const { return degree > 0 ? degree : 2 * k + 1; }
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--genus", cfg.genus, "Surface genus g >= 1")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--k", cfg.k, "Lower-central-series class k >= 2");
    cmd->add_option("-N,--degree", cfg.degree, "Truncation degree (default 2k+1)");
    cmd->add_option("--framing", cfg.framing, "Twist framing, +1 or -1")
        ->check(CLI::IsMember({1, -1}));
    cmd->add_option("--expansion", cfg.expansion,
                    "Expansion: symplectic, standard, or a file produced by 'expand "
                    "--dump'");
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--seed", cfg.seed, "Random seed for suites");
}

Expansion make_expansion(const RunConfig& cfg) {
    if (cfg.expansion == "symplectic") return symplectic_expansion(cfg.genus, cfg.trunc());
    if (cfg.expansion == "standard") return standard_expansion(cfg.genus, cfg.trunc());
    std::ifstream in(cfg.expansion);
    if (!in) throw std::invalid_argument("cannot open expansion file " + cfg.expansion);
    std::stringstream ss;
    ss << in.rdbuf();
    return deserialize(ss.str());
}

PairingContext make_pairing_context(int genus) {
    const char* path = std::getenv("GDT_PAIRING_TABLE");
    if (!path) return PairingContext(genus);
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("GDT_PAIRING_TABLE: cannot open " + std::string(path));
    std::stringstream ss;
    ss << in.rdbuf();
    PairingTable t = PairingTable::load(ss.str());
    if (t.genus != genus)
        throw std::invalid_argument("GDT_PAIRING_TABLE: table genus " +
                                    std::to_string(t.genus) + " != requested genus " +
                                    std::to_string(genus));
    return PairingContext(std::move(t));
}

void print_series(const TensorSeries& u, const RunConfig& cfg) {
    if (cfg.format == "structured") {
        for (const auto& [m, c] : u.terms)
            std::cout << "term " << m.size() << " " << (m.empty() ? "-" : monomial_str(m))
                      << " " << c.get_num().get_str() << " " << c.get_den().get_str()
                      << "\n";
        return;
    }
    for (int d = 0; d <= u.trunc; ++d) {
        TensorSeries p = u.graded_part(d);
        if (!p.is_zero()) std::cout << "degree " << d << ": " << to_string(p) << "\n";
    }
}

void print_helement(const HElement& x, const RunConfig& cfg) {
    if (cfg.format == "structured") {
        for (const auto& [h, lie] : x.val)
            for (const auto& [m, c] : lie.coeffs)
                std::cout << "term " << letter_name(h) << " " << monomial_str(m) << " "
                          << c.get_num().get_str() << " " << c.get_den().get_str() << "\n";
        return;
    }
    std::cout << to_string(x) << "\n";
}

int cmd_expand(const RunConfig& cfg, const std::string& word, bool dump) {
    Expansion th = make_expansion(cfg);
    if (dump) {
        std::cout << serialize(th);
        return 0;
    }
    print_series(th.expand_word(parse_group_word(word, cfg.genus)), cfg);
    return 0;
}

int cmd_twist(const RunConfig& cfg, const std::string& gamma_s, const std::string& x_s) {
    if (cfg.trunc() < cfg.k + 2)
        throw std::invalid_argument("twist commands need N >= k+2");
    Expansion th = make_expansion(cfg);
    Word gamma = parse_group_word(gamma_s, cfg.genus);
    Automorphism f = dehn_twist(th, gamma, cfg.k, cfg.framing);
    if (x_s.empty()) {
        std::cout << serialize(f);
        return 0;
    }
    print_series(aut_apply_word(f, th, parse_group_word(x_s, cfg.genus)), cfg);
    return 0;
}

int cmd_tau(const RunConfig& cfg, const std::string& gp_s, const std::string& gm_s) {
    if (cfg.trunc() < cfg.k + 2)
        throw std::invalid_argument("twist commands need N >= k+2");
    Expansion th = make_expansion(cfg);
    Word gp = parse_group_word(gp_s, cfg.genus);
    int k = cfg.k;
    Automorphism f(cfg.genus, cfg.trunc() - 1);
    HElement expected;
    int j;
    if (gm_s.empty()) {
        // Single curve: compare with the even-degree self-gluing formula.
        j = 2 * k - 2;
        f = dehn_twist(th, gp, k, cfg.framing);
        LieElement c = leading_class(gp, cfg.genus, k);
        expected = Rational(cfg.framing, 2) * glue(c, c);
    } else {
        // Pair: opposite twists, odd-degree mixed gluing formula.
        j = 2 * k - 1;
        Word gm = parse_group_word(gm_s, cfg.genus);
        Word delta = word_mul(gp, word_inv(gm));
        if (lcs_class(delta, cfg.genus, k + 1) < k + 1)
            throw std::invalid_argument("gamma+ gamma-^-1 is not of class k+1");
        f = compose(dehn_twist(th, gm, k, -1), dehn_twist(th, gp, k, +1));
        expected = glue(leading_class(gp, cfg.genus, k),
                        leading_class(delta, cfg.genus, k + 1));
    }
    HElement T = tau(th, f, j);
    std::cout << "routes agree: " << (T == expected ? "yes" : "NO") << "; integral: "
              << (T.is_integral() ? "yes" : "no") << "; value:\n";
    print_helement(T, cfg);
    return T == expected ? 0 : 1;
}

int cmd_glue(const RunConfig& cfg, const std::string& x_s, const std::string& y_s) {
    HElement G = glue(parse_lie(x_s, cfg.genus), parse_lie(y_s, cfg.genus));
    print_helement(G, cfg);
    return 0;
}

int cmd_phi(const RunConfig& cfg, const std::string& tree_s, const std::string& h_s,
            int leaf) {
    std::vector<std::string> toks;
    Tree t = parse_tree(tree_s, toks);
    std::vector<Word> colors;
    for (const std::string& s : toks) colors.push_back(parse_group_word(s, cfg.genus));
    if (leaf < 1 || leaf > t.nleaves)
        throw std::invalid_argument("leaf index out of range 1.." +
                                    std::to_string(t.nleaves));
    Word h = parse_group_word(h_s, cfg.genus);
    std::cout << word_str(phi_leaf(t, colors, h, leaf - 1)) << "\n";
    return 0;
}

int cmd_decompose(const RunConfig& cfg, const std::string& word, int depth) {
    Word w = parse_group_word(word, cfg.genus);
    CommutatorExpression ce = decompose(w, cfg.genus, cfg.k, depth);
    for (const TreeTerm& t : ce.terms) {
        std::vector<std::string> names;
        for (const Word& c : t.colors) names.push_back(word_str(c));
        std::cout << tree_str(t.tree, names) << "\n";
    }
    Word residue = word_mul(word_inv(ce.product()), w);
    std::cout << "residue class: >= " << lcs_class(residue, cfg.genus, cfg.k + depth)
              << "\n";
    return 0;
}

int cmd_kappa(const RunConfig& cfg, const std::string& u_s, const std::string& v_s,
              bool dump) {
    PairingContext P = make_pairing_context(cfg.genus);
    if (dump) {
        std::cout << P.table.dump();
        return 0;
    }
    BiElement k = P.kappa_tilde(parse_group_word(u_s, cfg.genus),
                                parse_group_word(v_s, cfg.genus));
    std::cout << to_string(k) << "\n";
    return 0;
}

int cmd_check(const RunConfig& cfg, const std::string& suite) {
    using Runner = std::function<CheckResult()>;
    std::uint64_t s = cfg.seed;
    std::vector<std::pair<std::string, Runner>> suites = {
        {"phi", [] { return check_phi_golden(); }},
        {"pruning", [s] { return check_pruning(s); }},
        {"pairing", [s] { return check_pairing_identities(s + 1); }},
        {"zeta", [s] { return check_boundary_annihilation(s + 2); }},
        {"symplectic", [] { return check_symplectic(); }},
        {"crossroute", [s] { return check_cross_route(s + 3); }},
        {"trees", [s] { return check_tree_reconstruction(s + 4); }},
        {"surgery", [s] { return check_surgery_formulas(s + 5); }},
        {"invariance", [s] { return check_invariance(s + 6); }},
        {"ranks", [] { return check_ranks(); }},
    };
    bool ok = true, found = false;
    for (const auto& [name, run] : suites) {
        if (suite != "all" && suite != name) continue;
        found = true;
        CheckResult r = run();
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail
                  << std::endl;
        ok = ok && r.pass;
    }
    if (!found) {
        std::cerr << "unknown suite '" << suite << "'; available: all";
        for (const auto& [name, run] : suites) std::cerr << " " << name;
        std::cerr << "\n";
        return 2;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact commutator calculus, intersection pairing, generalized Dehn "
                 "twists and Johnson homomorphisms on a one-boundary surface group"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string word, word2, tree_s;
    int leaf = 1, depth = 1;
    bool dump = false;

    CLI::App* expand = app.add_subcommand("expand", "Expand a group word");
    add_common(expand, cfg);
    expand->add_option("word", word, "Group word, e.g. 'a1 B2' or '[a1,b1]'");
    expand->add_flag("--dump", dump, "Print the serialized expansion instead");

    CLI::App* twist = app.add_subcommand("twist", "Generalized Dehn twist along a curve");
    add_common(twist, cfg);
    twist->add_option("gamma", word, "Twist curve (class >= k)")->required();
    twist->add_option("x", word2, "Optional word whose image to print");

    CLI::App* tau_c = app.add_subcommand(
        "tau", "Johnson homomorphism of a twist (one curve) or a twist pair");
    add_common(tau_c, cfg);
    tau_c->add_option("gamma", word, "Curve of class >= k")->required();
    tau_c->add_option("gamma2", word2, "Optional second curve (pair mode)");

    CLI::App* glue_c = app.add_subcommand("glue", "Glue two Lie elements");
    add_common(glue_c, cfg);
    glue_c->add_option("x", word, "Homogeneous Lie element, e.g. '[a1,b1]'")->required();
    glue_c->add_option("y", word2, "Homogeneous Lie element")->required();

    CLI::App* phi_c = app.add_subcommand("phi", "Edge word of a colored tree");
    add_common(phi_c, cfg);
    phi_c->add_option("tree", tree_s, "Tree with word leaves, e.g. '[a1,[b1,a2]]'")
        ->required();
    phi_c->add_option("--root", word, "Root word h")->required();
    phi_c->add_option("-j,--leaf", leaf, "Leaf index (1-based)");

    CLI::App* dec = app.add_subcommand("decompose", "Tree-commutator decomposition");
    add_common(dec, cfg);
    dec->add_option("word", word, "Word of class >= k")->required();
    dec->add_option("--depth", depth, "Accuracy: 1 (mod k+1) or 2 (mod k+2)")
        ->check(CLI::IsMember({1, 2}));

    CLI::App* kap = app.add_subcommand("kappa", "Conjugated intersection pairing");
    add_common(kap, cfg);
    kap->add_option("u", word, "First word");
    kap->add_option("v", word2, "Second word");
    kap->add_flag("--dump", dump, "Print the generator pairing table instead");

    CLI::App* chk = app.add_subcommand("check", "Run a verification suite");
    add_common(chk, cfg);
    std::string suite = "all";
    chk->add_option("suite", suite, "Suite name, or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return cmd_expand(cfg, word, dump);
        if (twist->parsed()) return cmd_twist(cfg, word, word2);
        if (tau_c->parsed()) return cmd_tau(cfg, word, word2);
        if (glue_c->parsed()) return cmd_glue(cfg, word, word2);
        if (phi_c->parsed()) return cmd_phi(cfg, tree_s, word, leaf);
        if (dec->parsed()) return cmd_decompose(cfg, word, depth);
        if (kap->parsed()) return cmd_kappa(cfg, word, word2, dump);
        if (chk->parsed()) return cmd_check(cfg, suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
