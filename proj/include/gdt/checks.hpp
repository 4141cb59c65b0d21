#pragma once

#include "gdt/diagrams.hpp"

#include <cstdint>
#include <random>

namespace gdt {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Seeded random helpers shared by the suites and the CLI.
Word random_word(std::mt19937_64& rng, int genus, int len);
// Random element of Gamma_k: product of k-leaf tree commutators with random
// (occasionally composite) leaf colors.
Word random_gamma(std::mt19937_64& rng, int genus, int k);

CheckResult check_phi_golden();
CheckResult check_pruning(std::uint64_t seed);
CheckResult check_pairing_identities(std::uint64_t seed);
CheckResult check_boundary_annihilation(std::uint64_t seed);
CheckResult check_symplectic();
CheckResult check_cross_route(std::uint64_t seed);
CheckResult check_tree_reconstruction(std::uint64_t seed);
CheckResult check_surgery_formulas(std::uint64_t seed);
CheckResult check_invariance(std::uint64_t seed);
CheckResult check_ranks();

std::vector<CheckResult> run_all_checks(std::uint64_t seed);

} // namespace gdt
