// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include "gdt/checks.hpp"

#include <iostream>

int main() {
    const std::uint64_t seed = 20260826;
    const std::vector<gdt::CheckResult> results = gdt::run_all_checks(seed);
    bool ok = true;
    int i = 0;
    for (const gdt::CheckResult& r : results) {
        std::cout << "criterion " << ++i << " [" << r.name << "]: "
                  << (r.pass ? "pass" : "FAIL") << " - " << r.detail << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
