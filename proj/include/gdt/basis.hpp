#pragma once

#include <stdexcept>
#include <string>

namespace gdt {

// Basis letters of H for genus g: a1,b1,...,ag,bg ordered a1 < b1 < a2 < b2 < ...
// Letter value: a_i = 2(i-1), b_i = 2(i-1)+1 (i is 1-based).
using Letter = int;

inline Letter a_gen(int i) { return 2 * (i - 1); }
inline Letter b_gen(int i) { return 2 * (i - 1) + 1; }
inline bool is_a_letter(Letter h) { return (h & 1) == 0; }
inline int handle_of(Letter h) { return h / 2 + 1; } // 1-based handle index

inline std::string letter_name(Letter h) {
    return std::string(is_a_letter(h) ? "a" : "b") + std::to_string(handle_of(h));
}

// omega(a_i, b_j) = delta_ij, omega(b_j, a_i) = -delta_ij, zero otherwise.
inline int omega_pair(Letter x, Letter y) {
    if (x / 2 != y / 2) return 0;
    if (is_a_letter(x) && !is_a_letter(y)) return 1;
    if (!is_a_letter(x) && is_a_letter(y)) return -1;
    return 0;
}

// Parse "a3" / "b12"; throws on malformed input or index out of range.
inline Letter parse_letter(const std::string& s, int genus) {
    if (s.size() < 2 || (s[0] != 'a' && s[0] != 'b'))
        throw std::runtime_error("bad basis letter: '" + s + "'");
    int idx = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::runtime_error("bad basis letter: '" + s + "'");
        idx = idx * 10 + (s[i] - '0');
    }
    if (idx < 1 || idx > genus)
        throw std::runtime_error("letter index out of range for genus: '" + s + "'");
    return s[0] == 'a' ? a_gen(idx) : b_gen(idx);
}

} // namespace gdt
