#pragma once

// Brute-force helpers shared by the unit tests.

#include <cstdint>
#include <set>
#include <vector>

#include "z4nu/echelon.hpp"

namespace z4nu::testing {

inline std::uint32_t pack(const Z4Vec& v) {
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < v.size(); ++i) w |= static_cast<std::uint32_t>(v[i].value()) << (2 * i);
    return w;
}

/// Every Z4-combination of `gens`, packed two bits per entry.
inline std::set<std::uint32_t> brute_span(const std::vector<Z4Vec>& gens, std::size_t width) {
    std::set<std::uint32_t> out{0};
    for (const auto& g : gens) {
        std::set<std::uint32_t> next;
        for (std::uint32_t w : out)
            for (int c = 0; c < 4; ++c) {
                Z4Vec v(width);
                for (std::size_t i = 0; i < width; ++i) v[i] = Z4(static_cast<int>((w >> (2 * i)) & 3u)) + Z4(c) * g[i];
                next.insert(pack(v));
            }
        out = std::move(next);
    }
    return out;
}

inline Z4Vec unpack(std::uint32_t w, std::size_t width) {
    Z4Vec v(width);
    for (std::size_t i = 0; i < width; ++i) v[i] = Z4(static_cast<int>((w >> (2 * i)) & 3u));
    return v;
}

}  // namespace z4nu::testing
