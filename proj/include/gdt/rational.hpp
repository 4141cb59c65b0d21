#pragma once

#include <gmpxx.h>
#include <string>

namespace gdt {

// Exact arbitrary-precision rationals; no floating point anywhere.
using Rational = mpq_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace gdt
