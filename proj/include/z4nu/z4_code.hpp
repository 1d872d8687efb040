#pragma once

/**
 * @file z4_code.hpp
 * @brief Cyclic codes over Z4 and their form <g + 2p, 2a>.
 *
 * A code is held as the Howell form of the Z4-span of all cyclic shifts of its
 * generators. Vectors list coefficients by descending power, so the pivot of a
 * row is its leading term.
 */

#include <cstdint>
#include <vector>

#include "z4nu/binpoly.hpp"
#include "z4nu/cyclic_poly.hpp"
#include "z4nu/echelon.hpp"

namespace z4nu {

/// Coefficients of f by descending power: entry i holds z^(n-1-i).
inline Z4Vec to_vec(const PolyZ4& f) {
    const int n = f.n();
    Z4Vec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = f[n - 1 - i];
    return v;
}

inline PolyZ4 from_vec(const Z4Vec& v, std::size_t offset, int n) {
    PolyZ4 f(Z4Ring{}, n);
    for (int i = 0; i < n; ++i) f.set(n - 1 - i, v[offset + static_cast<std::size_t>(i)]);
    return f;
}

/// Binary polynomial whose bit i is (coefficient of z^i) mod 2, read from a descending block.
inline BinPoly block_residue(const Z4Vec& v, std::size_t offset, int n) {
    BinPoly p;
    for (int i = 0; i < n; ++i)
        if (v[offset + static_cast<std::size_t>(i)].is_unit()) p.set(n - 1 - i);
    return p;
}

/// Generator of the binary cyclic code spanned by `polys`, with the zero ideal giving z^n - 1.
inline BinPoly ideal_generator(const std::vector<BinPoly>& polys, int n) {
    BinPoly g = BinPoly::xn_minus_1(n);
    for (const auto& p : polys) g = gcd(g, p);
    return g;
}

struct Z4CodeSpec {
    int n = 1;
    std::vector<PolyZ4> gens;
};

inline Z4Module z4_module(const Z4CodeSpec& spec) {
    std::vector<Z4Vec> vecs;
    for (const auto& g : spec.gens) {
        if (g.n() != spec.n) throw MismatchError("generator length differs from code length");
        for (int j = 0; j < spec.n; ++j) vecs.push_back(to_vec(g.shifted(j)));
    }
    return Z4Module::span(spec.n, vecs);
}

inline bool z4_membership(const Z4CodeSpec& spec, const PolyZ4& w) {
    if (w.n() != spec.n) throw MismatchError("word length differs from code length");
    return z4_module(spec).contains(to_vec(w));
}

/// Residue code generator: gcd of z^n - 1 and the rows mod 2.
inline BinPoly residue_generator(const Z4Module& m, int n) {
    std::vector<BinPoly> res;
    for (const auto& r : m.rows()) res.push_back(block_residue(r, 0, n));
    return ideal_generator(res, n);
}

/// Torsion code generator: {x mod 2 : 2x in M}.
/// Uses the module of all (r + 2u, r); its elements with zero first half are (0, m), m in M even.
inline BinPoly torsion_generator(const Z4Module& m, int n) {
    const auto w = static_cast<std::size_t>(n);
    std::vector<Z4Vec> gens;
    for (const auto& r : m.rows()) {
        Z4Vec v(2 * w);
        for (std::size_t i = 0; i < w; ++i) v[i] = v[w + i] = r[i];
        gens.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < w; ++i) {
        Z4Vec v(2 * w);
        v[i] = Z4(2);
        gens.push_back(std::move(v));
    }
    std::vector<BinPoly> halves;
    for (const auto& r : Z4Module::span(2 * n, gens).rows_from(n)) {
        BinPoly h;
        for (int i = 0; i < n; ++i)
            if (r[w + static_cast<std::size_t>(i)] == Z4(2)) h.set(n - 1 - i);
        halves.push_back(std::move(h));
    }
    return ideal_generator(halves, n);
}

struct Z4CanonicalForm {
    BinPoly g, p, a;
    friend bool operator==(const Z4CanonicalForm&, const Z4CanonicalForm&) = default;
};

/**
 * (g, p, a) with the code equal to <g + 2p, 2a>. p is the 2-part of a codeword
 * with residue g, reduced mod a; it is 0 when g = z^n - 1.
 */
inline Z4CanonicalForm z4_canonical_form(const Z4Module& m, int n) {
    Z4CanonicalForm f;
    f.g = residue_generator(m, n);
    f.a = torsion_generator(m, n);
    if (f.g == BinPoly::xn_minus_1(n)) return f;

    const auto rows = m.rows();
    std::vector<std::vector<std::uint8_t>> res;
    for (const auto& r : rows) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = r[i].is_unit() ? 1 : 0;
        res.push_back(std::move(bits));
    }
    std::vector<std::uint8_t> target(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] = f.g.coeff(n - 1 - i) ? 1 : 0;
    const auto comb = z2_solve(res, target);
    if (!comb) throw InvariantViolation("residue generator has no preimage in the code");

    Z4Vec w(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < rows.size(); ++j)
        if ((*comb)[j])
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += rows[j][i];
    // w = g + 2e coefficientwise; e is read off the Z4 difference.
    const PolyZ4 diff = from_vec(w, 0, n) - lift_z4(f.g, n);
    BinPoly e;
    for (int i = 0; i < n; ++i) {
        if (diff[i].is_unit()) throw InvariantViolation("preimage residue differs from g");
        if (diff[i] == Z4(2)) e.set(i);
    }
    f.p = e % f.a;
    return f;
}

inline Z4CanonicalForm z4_canonical_form(const Z4CodeSpec& spec) { return z4_canonical_form(z4_module(spec), spec.n); }

/// The code <g + 2p, 2a>; binary z^n - 1 contributes 0.
inline Z4CodeSpec z4_code_from_form(const Z4CanonicalForm& f, int n) {
    PolyZ4 g = lift_z4(f.g, n);
    const PolyZ4 two(Z4Ring{}, n, {Z4(2)});
    g += two * lift_z4(f.p, n);
    return {n, {g, two * lift_z4(f.a, n)}};
}

/// The stated constraints on (g, p, a): a | g | z^n - 1, and p = 0 or
/// (a | p (z^n - 1)/g and deg p < deg a).
inline bool z4_admissible_literal(const Z4CanonicalForm& f, int n) {
    const BinPoly xn = BinPoly::xn_minus_1(n);
    if (!divides(f.g, xn) || !divides(f.a, f.g)) return false;
    if (f.p.is_zero()) return true;
    if (f.p.degree() >= f.a.degree()) return false;
    return divides(f.a, f.p * exact_quotient(xn, f.g));
}

/**
 * Admissibility with the carry of h g over Z4 taken into account, h = (z^n - 1)/g.
 * With 0/1 lifts, h g = 2 e mod z^n - 1 in Z4, so h (g + 2p) = 2 (e + h p) and
 * the torsion stays <a> exactly when a | (e + h p) mod z^n - 1.
 */
inline bool z4_admissible_carry(const Z4CanonicalForm& f, int n) {
    const BinPoly xn = BinPoly::xn_minus_1(n);
    if (!divides(f.g, xn) || !divides(f.a, f.g)) return false;
    if (!f.p.is_zero() && f.p.degree() >= f.a.degree()) return false;
    if (f.g == xn) return f.p.is_zero();
    const BinPoly h = exact_quotient(xn, f.g);
    const PolyZ4 hg = lift_z4(h, n) * lift_z4(f.g, n);
    BinPoly e;
    for (int i = 0; i < n; ++i)
        if (hg[i] == Z4(2)) e.set(i);
    const BinPoly val = (e + h * f.p).mod_xn(n);
    return f.a == xn ? val.is_zero() : divides(f.a, val);
}

}  // namespace z4nu
