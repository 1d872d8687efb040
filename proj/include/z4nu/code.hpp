#pragma once

/**
 * @file code.hpp
 * @brief Cyclic codes over R_theta: towers, staged generators, unique form.
 *
 * Every x in R_theta[z]/<z^n - 1> is written c + k d with c, d in
 * Z4[z]/<z^n - 1>. A code is the Z4-span of z^j g and z^j (v g) over its
 * generators g, stored as width-2n vectors [c | d] in descending powers.
 * Multiplication by z and by ring scalars is Z4-linear on this form, so one
 * Howell engine gives membership, size, the image phi(C) (the c-blocks) and
 * the kernel part Tor(C) (d-blocks of rows whose c-block vanishes).
 */

#include <array>
#include <string>
#include <vector>

#include "z4nu/binpoly.hpp"
#include "z4nu/cyclic_poly.hpp"
#include "z4nu/echelon.hpp"
#include "z4nu/error.hpp"
#include "z4nu/ring.hpp"
#include "z4nu/z4_code.hpp"

namespace z4nu {

struct CodeSpec {
    int n;
    Theta theta;
    std::vector<PolyR> gens;
};

/// The pair (c, d) of x = c + k d.
struct SplitPoly {
    PolyZ4 c, d;

    explicit SplitPoly(int n) : c(Z4Ring{}, n), d(Z4Ring{}, n) {}
    SplitPoly(PolyZ4 c_, PolyZ4 d_) : c(std::move(c_)), d(std::move(d_)) {}

    friend bool operator==(const SplitPoly&, const SplitPoly&) = default;
};

inline SplitPoly split(const PolyR& f) {
    const Theta& theta = f.ring().theta();
    SplitPoly s(f.n());
    for (int i = 0; i < f.n(); ++i) {
        const auto [c, d] = theta.split(f[i]);
        s.c.set(i, c);
        s.d.set(i, d);
    }
    return s;
}

inline PolyR join(const SplitPoly& s, const Theta& theta) {
    PolyR f(RRing(theta), s.c.n());
    for (int i = 0; i < s.c.n(); ++i) f.set(i, theta.join(s.c[i], s.d[i]));
    return f;
}

inline Z4Vec to_split_vec(const SplitPoly& s) {
    Z4Vec v = to_vec(s.c);
    const Z4Vec d = to_vec(s.d);
    v.insert(v.end(), d.begin(), d.end());
    return v;
}

inline SplitPoly from_split_vec(const Z4Vec& v, int n) {
    return {from_vec(v, 0, n), from_vec(v, static_cast<std::size_t>(n), n)};
}

inline Z4Module code_module(const CodeSpec& spec) {
    std::vector<Z4Vec> vecs;
    const PolyR nu = PolyR::monomial(RRing(spec.theta), spec.n, RElem::nu(), 0);
    for (const auto& g : spec.gens) {
        if (g.n() != spec.n) throw MismatchError("generator length differs from code length");
        if (!(g.ring().theta() == spec.theta)) throw MismatchError("generator theta differs from code theta");
        const PolyR vg = nu * g;
        for (int j = 0; j < spec.n; ++j) {
            vecs.push_back(to_split_vec(split(g.shifted(j))));
            vecs.push_back(to_split_vec(split(vg.shifted(j))));
        }
    }
    return Z4Module::span(2 * spec.n, vecs);
}

inline bool membership_r(const CodeSpec& spec, const PolyR& w) {
    if (w.n() != spec.n || !(w.ring().theta() == spec.theta))
        throw MismatchError("word and code differ in length or theta");
    return code_module(spec).contains(to_split_vec(split(w)));
}

/// phi(C) as a Z4 module of width n.
inline Z4Module image_module(const Z4Module& m, int n) {
    std::vector<Z4Vec> cs;
    for (const auto& r : m.rows()) cs.emplace_back(r.begin(), r.begin() + n);
    return Z4Module::span(n, cs);
}

/// Tor(C) = {d : k d in C} as a Z4 module of width n.
inline Z4Module kernel_module(const Z4Module& m, int n) {
    std::vector<Z4Vec> ds;
    for (const auto& r : m.rows_from(n)) ds.emplace_back(r.begin() + n, r.end());
    return Z4Module::span(n, ds);
}

struct Towers {
    BinPoly g11, g22, g33, g44;
    friend bool operator==(const Towers&, const Towers&) = default;
};

inline Towers towers(const CodeSpec& spec) {
    const Z4Module m = code_module(spec);
    const Z4Module im = image_module(m, spec.n);
    const Z4Module ker = kernel_module(m, spec.n);
    return {residue_generator(im, spec.n), torsion_generator(im, spec.n), residue_generator(ker, spec.n),
            torsion_generator(ker, spec.n)};
}

/**
 * The ten binary polynomials of the staged form
 *   g_1 = g11 + 2 g12 + k g13 + 2k g14,  g_2 = 2 g22 + k g23 + 2k g24,
 *   g_3 = k g33 + 2k g34,               g_4 = 2k g44.
 * Used both for user-supplied staged data and for the unique form.
 */
struct CanonicalGens {
    int n = 1;
    BinPoly g11, g12, g13, g14, g22, g23, g24, g33, g34, g44;

    int s1() const { return g11.degree(); }
    int s2() const { return g22.degree(); }
    int s3() const { return g33.degree(); }
    int s4() const { return g44.degree(); }
    Towers towers() const { return {g11, g22, g33, g44}; }

    friend bool operator==(const CanonicalGens&, const CanonicalGens&) = default;
};

inline const char* const kGenNames[10] = {"g11", "g12", "g13", "g14", "g22", "g23", "g24", "g33", "g34", "g44"};

inline std::array<const BinPoly*, 10> entries(const CanonicalGens& g) {
    return {&g.g11, &g.g12, &g.g13, &g.g14, &g.g22, &g.g23, &g.g24, &g.g33, &g.g34, &g.g44};
}
inline std::array<BinPoly*, 10> entries(CanonicalGens& g) {
    return {&g.g11, &g.g12, &g.g13, &g.g14, &g.g22, &g.g23, &g.g24, &g.g33, &g.g34, &g.g44};
}

/// The four staged generators in split form. Planes are taken mod z^n - 1.
inline std::array<SplitPoly, 4> staged_split(const CanonicalGens& g) {
    const int n = g.n;
    const PolyZ4 two(Z4Ring{}, n, {Z4(2)});
    auto pair = [&](const BinPoly& lo, const BinPoly& hi) { return lift_z4(lo, n) + two * lift_z4(hi, n); };
    const PolyZ4 zero(Z4Ring{}, n);
    return {SplitPoly{pair(g.g11, g.g12), pair(g.g13, g.g14)}, SplitPoly{two * lift_z4(g.g22, n), pair(g.g23, g.g24)},
            SplitPoly{zero, pair(g.g33, g.g34)}, SplitPoly{zero, two * lift_z4(g.g44, n)}};
}

inline std::array<PolyR, 4> staged_generators(const CanonicalGens& g, const Theta& theta) {
    const auto s = staged_split(g);
    return {join(s[0], theta), join(s[1], theta), join(s[2], theta), join(s[3], theta)};
}

struct StagedViolation {
    std::string condition;  ///< "3.1" .. "3.4"
    std::string message;
};

/**
 * Literal check of the staged conditions:
 *   3.1: g22 | g11 | z^n - 1
 *   3.2: g12 = 0 or (g22 | g12 (z^n - 1)/g11 and deg g12 < deg g22)
 *   3.3: g44 | g33 | z^n - 1
 *   3.4: g34 = 0 or (g44 | g34 (z^n - 1)/g33 and deg g34 < deg g44)
 */
inline std::vector<StagedViolation> staged_violations(const CanonicalGens& staged) {
    const int n = staged.n;
    const BinPoly xn = BinPoly::xn_minus_1(n);
    std::vector<StagedViolation> out;
    // A zero diagonal entry and z^n - 1 are the same element of Z2[z]/<z^n - 1>.
    CanonicalGens f = staged;
    for (BinPoly* d : {&f.g11, &f.g22, &f.g33, &f.g44})
        if (d->is_zero()) *d = xn;
    for (const BinPoly* p : entries(f))
        if (p->degree() > n) {
            out.push_back({"3.1", "staged polynomial of degree above n"});
            return out;
        }
    auto chain = [&](const char* cond, const BinPoly& lo, const BinPoly& hi, const char* lo_name,
                     const char* hi_name) {
        if (hi.is_zero() || !divides(hi, xn)) {
            out.push_back({cond, std::string(hi_name) + " does not divide z^n-1"});
            return false;
        }
        if (lo.is_zero() || !divides(lo, hi)) {
            out.push_back({cond, std::string(lo_name) + " does not divide " + hi_name});
            return false;
        }
        return true;
    };
    auto off = [&](const char* cond, const BinPoly& p, const BinPoly& lo, const BinPoly& hi, const char* p_name,
                   const char* lo_name, const char* hi_name) {
        if (p.is_zero()) return;
        if (p.degree() >= lo.degree())
            out.push_back({cond, std::string("deg ") + p_name + " >= deg " + lo_name});
        else if (!divides(lo, p * exact_quotient(xn, hi)))
            out.push_back({cond, std::string(lo_name) + " does not divide " + p_name + "(z^n-1)/" + hi_name});
    };
    if (chain("3.1", f.g22, f.g11, "g22", "g11")) off("3.2", f.g12, f.g22, f.g11, "g12", "g22", "g11");
    if (chain("3.3", f.g44, f.g33, "g44", "g33")) off("3.4", f.g34, f.g44, f.g33, "g34", "g44", "g33");
    return out;
}

/// Off-diagonal entries violating "g_ij = 0 or deg g_ij < deg g_jj", by name.
inline std::vector<std::string> degree_violations(const CanonicalGens& g) {
    std::vector<std::string> out;
    auto check = [&](const BinPoly& p, const BinPoly& diag, const char* name) {
        if (!p.is_zero() && p.degree() >= diag.degree()) out.emplace_back(name);
    };
    check(g.g12, g.g22, "g12");
    check(g.g13, g.g33, "g13");
    check(g.g14, g.g44, "g14");
    check(g.g23, g.g33, "g23");
    check(g.g24, g.g44, "g24");
    check(g.g34, g.g44, "g34");
    return out;
}

/// Validates the staged conditions and builds the code they describe.
inline CodeSpec build_staged(const CanonicalGens& f, const Theta& theta) {
    const auto bad = staged_violations(f);
    if (!bad.empty()) throw ConditionViolation(bad.front().condition, bad.front().message);
    const auto gens = staged_generators(f, theta);
    return {f.n, theta, {gens.begin(), gens.end()}};
}

namespace detail {

inline BinPoly plane(const PolyZ4& f, int bit) {
    BinPoly p;
    for (int i = 0; i < f.n(); ++i)
        if (f[i].value() & bit) p.set(i);
    return p;
}

/// s -= q * t, with q a binary polynomial lifted to Z4.
inline void sub_multiple(SplitPoly& s, const BinPoly& q, const SplitPoly& t) {
    if (q.is_zero()) return;
    const PolyZ4 lq = lift_z4(q, s.c.n());
    s.c -= lq * t.c;
    s.d -= lq * t.d;
}

/// Quotient of p by the diagonal entry d. A diagonal equal to z^n - 1 stands
/// for the zero generator, which cannot reduce anything.
inline BinPoly cascade_quotient(const BinPoly& p, const BinPoly& d, int n) {
    if (d == BinPoly::xn_minus_1(n)) return {};
    return divmod(p, d).quotient;
}

}  // namespace detail

/**
 * Division cascade on the staged generators: column 2 (g12 by g22), then
 * column 3 (g13, g23 by g33), then column 4 (g14, g24, g34 by g44). Each step
 * subtracts an actual multiple of a generator, so carries into the next plane
 * are kept exactly and the code is unchanged. Idempotent.
 */
inline CanonicalGens reduce_unique(const CanonicalGens& staged) {
    using detail::cascade_quotient;
    using detail::plane;
    using detail::sub_multiple;
    const int n = staged.n;
    auto s = staged_split(staged);

    sub_multiple(s[0], cascade_quotient(plane(s[0].c, 2), staged.g22, n), s[1]);

    sub_multiple(s[0], cascade_quotient(plane(s[0].d, 1), staged.g33, n), s[2]);
    sub_multiple(s[1], cascade_quotient(plane(s[1].d, 1), staged.g33, n), s[2]);

    sub_multiple(s[0], cascade_quotient(plane(s[0].d, 2), staged.g44, n), s[3]);
    sub_multiple(s[1], cascade_quotient(plane(s[1].d, 2), staged.g44, n), s[3]);
    sub_multiple(s[2], cascade_quotient(plane(s[2].d, 2), staged.g44, n), s[3]);

    CanonicalGens out = staged;
    out.g12 = plane(s[0].c, 2);
    out.g13 = plane(s[0].d, 1);
    out.g14 = plane(s[0].d, 2);
    out.g23 = plane(s[1].d, 1);
    out.g24 = plane(s[1].d, 2);
    out.g34 = plane(s[2].d, 2);
    return out;
}

namespace detail {

/// d-part of a codeword whose c-part is t, found by reducing (t | 0) over the c-block pivots.
inline PolyZ4 lift_through(const Z4Module& m, const PolyZ4& t, int n) {
    SplitPoly probe(t, PolyZ4(Z4Ring{}, n));
    const Z4Vec rem = m.reduce(to_split_vec(probe), n);
    for (int i = 0; i < n; ++i)
        if (!rem[static_cast<std::size_t>(i)].is_zero())
            throw InvariantViolation("c-part has no preimage in the code");
    return -from_vec(rem, static_cast<std::size_t>(n), n);
}

}  // namespace detail

/// The unique generator form of the code, independent of the generating set.
inline CanonicalGens canonicalize(const CodeSpec& spec) {
    const int n = spec.n;
    const BinPoly xn = BinPoly::xn_minus_1(n);
    const Z4Module m = code_module(spec);
    const Z4CanonicalForm top = z4_canonical_form(image_module(m, n), n);
    const Z4CanonicalForm bottom = z4_canonical_form(kernel_module(m, n), n);

    CanonicalGens g;
    g.n = n;
    g.g11 = top.g;
    g.g12 = top.p;
    g.g22 = top.a;
    g.g33 = bottom.g;
    g.g34 = bottom.p;
    g.g44 = bottom.a;

    const PolyZ4 two(Z4Ring{}, n, {Z4(2)});
    if (g.g11 != xn) {
        const PolyZ4 d = detail::lift_through(m, lift_z4(g.g11, n) + two * lift_z4(g.g12, n), n);
        g.g13 = detail::plane(d, 1);
        g.g14 = detail::plane(d, 2);
    }
    if (g.g22 != xn) {
        const PolyZ4 d = detail::lift_through(m, two * lift_z4(g.g22, n), n);
        g.g23 = detail::plane(d, 1);
        g.g24 = detail::plane(d, 2);
    }
    return reduce_unique(g);
}

}  // namespace z4nu
