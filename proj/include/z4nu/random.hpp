#pragma once

/**
 * @file random.hpp
 * @brief Deterministic random codes for property tests and the census.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "z4nu/binpoly.hpp"
#include "z4nu/code.hpp"
#include "z4nu/cyclic_poly.hpp"
#include "z4nu/ring.hpp"

namespace z4nu {

/// One independent stream per (seed, n, theta index, sample index).
inline std::mt19937_64 sample_rng(std::uint64_t seed, int n, int theta_index, int sample) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(theta_index),
                      static_cast<std::uint32_t>(sample)};
    return std::mt19937_64(seq);
}

inline int theta_index(const Theta& theta) {
    const auto& all = Theta::all();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == theta) return static_cast<int>(i);
    return -1;
}

inline PolyR random_poly(std::mt19937_64& rng, int n, const Theta& theta, double density = 0.5) {
    std::uniform_int_distribution<int> coef(0, 15);
    std::bernoulli_distribution keep(density);
    PolyR f(RRing(theta), n);
    for (int i = 0; i < n; ++i)
        if (keep(rng)) f.set(i, RElem::from_code(static_cast<unsigned>(coef(rng))));
    return f;
}

/// 1 to 3 random generators, each scaled by one of 1, 2, k, 2k so that all
/// tower shapes occur.
inline CodeSpec random_code(std::mt19937_64& rng, int n, const Theta& theta) {
    const RElem k = theta.k();
    const RElem scales[5] = {{1, 0}, {2, 0}, k, theta.mul({2, 0}, k), {1, 0}};
    std::uniform_int_distribution<int> count(1, 3), pick(0, 4);
    CodeSpec spec{n, theta, {}};
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
        const PolyR f = random_poly(rng, n, theta);
        spec.gens.push_back(PolyR::monomial(RRing(theta), n, scales[pick(rng)], 0) * f);
    }
    return spec;
}

inline BinPoly random_binpoly(std::mt19937_64& rng, int below_degree) {
    BinPoly p;
    std::bernoulli_distribution bit(0.5);
    for (int i = 0; i < below_degree; ++i)
        if (bit(rng)) p.set(i);
    return p;
}

namespace detail {

/// Random (lo, hi, off) with lo | hi | z^n - 1 and off admissible for the staged conditions.
inline void random_chain(std::mt19937_64& rng, int n, BinPoly& hi, BinPoly& lo, BinPoly& off) {
    const BinPoly xn = BinPoly::xn_minus_1(n);
    const auto divs = divisors_of_xn_minus_1(n);
    std::uniform_int_distribution<std::size_t> pick(0, divs.size() - 1);
    hi = divs[pick(rng)];
    std::vector<BinPoly> below;
    for (const auto& d : divs)
        if (divides(d, hi)) below.push_back(d);
    lo = below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)];
    // off must be a multiple of m = lo / gcd(lo, (z^n - 1)/hi), of degree below deg lo.
    const BinPoly m = exact_quotient(lo, gcd(lo, exact_quotient(xn, hi)));
    off = m * random_binpoly(rng, lo.degree() - m.degree());
}

}  // namespace detail

/// Random staged data satisfying the staged conditions; the off-diagonal
/// entries g13, g14, g23, g24 are unconstrained polynomials of degree < n.
inline CanonicalGens random_staged(std::mt19937_64& rng, int n) {
    CanonicalGens g;
    g.n = n;
    detail::random_chain(rng, n, g.g11, g.g22, g.g12);
    detail::random_chain(rng, n, g.g33, g.g44, g.g34);
    g.g13 = random_binpoly(rng, n);
    g.g14 = random_binpoly(rng, n);
    g.g23 = random_binpoly(rng, n);
    g.g24 = random_binpoly(rng, n);
    return g;
}

/// The same code with its generators permuted.
inline CodeSpec permuted(const CodeSpec& spec, std::mt19937_64& rng) {
    CodeSpec out = spec;
    std::shuffle(out.gens.begin(), out.gens.end(), rng);
    return out;
}

/// The same code with a random combination of its generators appended.
inline CodeSpec with_redundant(const CodeSpec& spec, std::mt19937_64& rng) {
    CodeSpec out = spec;
    PolyR extra(RRing(spec.theta), spec.n);
    for (const auto& g : spec.gens) extra += random_poly(rng, spec.n, spec.theta) * g;
    std::uniform_int_distribution<std::size_t> at(0, out.gens.size());
    out.gens.insert(out.gens.begin() + static_cast<std::ptrdiff_t>(at(rng)), extra);
    return out;
}

/// The same code with one generator replaced by itself plus a multiple of
/// another. A lone generator is multiplied by the unit 1 + 2p instead.
inline CodeSpec mixed(const CodeSpec& spec, std::mt19937_64& rng) {
    CodeSpec out = spec;
    if (out.gens.empty()) return out;
    if (out.gens.size() == 1) {
        const PolyR one = PolyR::monomial(RRing(spec.theta), spec.n, {1, 0}, 0);
        const PolyR two = PolyR::monomial(RRing(spec.theta), spec.n, {2, 0}, 0);
        out.gens[0] = (one + two * random_poly(rng, spec.n, spec.theta)) * out.gens[0];
        return out;
    }
    std::uniform_int_distribution<std::size_t> pick(0, out.gens.size() - 1);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (j == i) j = (i + 1) % out.gens.size();
    out.gens[i] += random_poly(rng, spec.n, spec.theta) * out.gens[j];
    return out;
}

}  // namespace z4nu
