#pragma once

/**
 * @file rank.hpp
 * @brief Closed-form rank and cardinality of a code in unique form, and the
 * shift-family spanning set B.
 */

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "z4nu/code.hpp"
#include "z4nu/error.hpp"

namespace z4nu {

/// Number of shifts taken of each staged generator: n - s1, s1 - s2, s1 - s3, min(s2, s3) - s4.
inline std::array<int, 4> shift_counts(const CanonicalGens& g) {
    const int st = std::min(g.s2(), g.s3());
    return {g.n - g.s1(), g.s1() - g.s2(), g.s1() - g.s3(), st - g.s4()};
}

inline void check_shift_counts(const CanonicalGens& g) {
    static const char* const names[4] = {"n-s1", "s1-s2", "s1-s3", "min(s2,s3)-s4"};
    const auto cnt = shift_counts(g);
    for (int i = 0; i < 4; ++i)
        if (cnt[static_cast<std::size_t>(i)] < 0)
            throw ShiftCountError("negative shift count " + std::string(names[i]) + " = " +
                                  std::to_string(cnt[static_cast<std::size_t>(i)]) + " (s1..s4 = " +
                                  std::to_string(g.s1()) + "," + std::to_string(g.s2()) + "," +
                                  std::to_string(g.s3()) + "," + std::to_string(g.s4()) + ")");
}

/// n + s1 + min(s2, s3) - s2 - s3 - s4.
inline int compute_rank(const CanonicalGens& g) {
    check_shift_counts(g);
    const auto cnt = shift_counts(g);
    return cnt[0] + cnt[1] + cnt[2] + cnt[3];
}

/// Exponent of the closed-form cardinality:
/// 4n + s1 + s~ - 3 s2 - 2 s3 - s4 when g23 != 0, else 4n + s~ - 2 s2 - 2 s3 - s4.
inline int compute_cardinality(const CanonicalGens& g) {
    const int st = std::min(g.s2(), g.s3());
    if (!g.g23.is_zero()) return 4 * g.n + g.s1() + st - 3 * g.s2() - 2 * g.s3() - g.s4();
    return 4 * g.n + st - 2 * g.s2() - 2 * g.s3() - g.s4();
}

/// log2 |C| read off the towers: |C| = |phi(C)| |Tor(C)| = 2^(2n - s1 - s2) 2^(2n - s3 - s4).
inline int structural_log2_cardinality(const CanonicalGens& g) {
    return 4 * g.n - g.s1() - g.s2() - g.s3() - g.s4();
}

struct SpanElement {
    int generator;  ///< 1..4
    int shift;      ///< power of z
    PolyR poly;
};

/// B = {z^j g_1 : j < n-s1} u {z^j g_2 : j < s1-s2} u {z^j g_3 : j < s1-s3} u {z^j g_4 : j < s~-s4},
/// ordered by generator, then shift.
inline std::vector<SpanElement> minimal_spanning_set(const CanonicalGens& g, const Theta& theta) {
    check_shift_counts(g);
    const auto cnt = shift_counts(g);
    const auto gens = staged_generators(g, theta);
    std::vector<SpanElement> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < cnt[static_cast<std::size_t>(i)]; ++j)
            out.push_back({i + 1, j, gens[static_cast<std::size_t>(i)].shifted(j)});
    return out;
}

}  // namespace z4nu
