#pragma once

/**
 * @file relations.hpp
 * @brief The eight divisibility relations between the unique-form polynomials.
 *
 * Rational expressions are evaluated fraction-free: each quotient is an exact
 * division in Z2[z], taken in the order the expression is built. Two readings
 * are reported. The plain reading keeps intermediate products as ordinary
 * polynomials; the quotient reading reduces each product mod z^n - 1 before
 * dividing. The final divisibility is tested on the dividend reduced mod
 * z^n - 1, with a divisor z^n - 1 meaning "dividend is 0".
 */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "z4nu/binpoly.hpp"
#include "z4nu/code.hpp"
#include "z4nu/ring.hpp"

namespace z4nu {

struct RelationReading {
    bool evaluated = false;     ///< false when an exact division failed
    std::string failed_step;    ///< the division that failed, if any
    BinPoly dividend;           ///< reduced mod z^n - 1
    bool holds = false;
};

struct RelationResult {
    std::string id;         ///< "i" .. "viii", with a suffix for the theta sub-cases of (vii)
    std::string statement;  ///< e.g. "g44 | g23"
    bool applicable = true;
    BinPoly divisor;
    RelationReading plain, quotient;

    /// False when an exact division failed, so the relation's precondition is not met.
    bool evaluable() const { return plain.evaluated; }
    /// Holds, is not applicable for this theta, or cannot be evaluated.
    bool ok() const { return !applicable || !plain.evaluated || plain.holds; }
};

struct RelationReport {
    std::vector<RelationResult> results;
    bool all_hold() const {
        for (const auto& r : results)
            if (!r.ok()) return false;
        return true;
    }
};

inline bool divides_mod_xn(const BinPoly& d, const BinPoly& f, int n) {
    const BinPoly r = f.mod_xn(n);
    if (d == BinPoly::xn_minus_1(n)) return r.is_zero();
    return divides(d, r);
}

namespace detail {

struct InexactDivision {
    std::string step;
};

/// Evaluation context for one reading.
class RelCtx {
public:
    RelCtx(int n, bool quotient) : n_(n), quotient_(quotient) {}
    BinPoly mul(const BinPoly& x, const BinPoly& y) const {
        BinPoly p = x * y;
        return quotient_ ? p.mod_xn(n_) : p;
    }
    BinPoly div(const BinPoly& f, const BinPoly& d, const std::string& step) const {
        auto [q, r] = divmod(f, d);
        if (!r.is_zero()) throw InexactDivision{step};
        return q;
    }

private:
    int n_;
    bool quotient_;
};

using RelExpr = std::function<BinPoly(const RelCtx&)>;

inline RelationReading evaluate(const RelExpr& expr, const BinPoly& divisor, int n, bool quotient) {
    RelationReading out;
    try {
        out.dividend = expr(RelCtx(n, quotient)).mod_xn(n);
        out.evaluated = true;
        out.holds = divides_mod_xn(divisor, out.dividend, n);
    } catch (const InexactDivision& e) {
        out.failed_step = e.step;
    }
    return out;
}

inline bool theta_in(const Theta& t, std::initializer_list<RElem> values) {
    for (RElem v : values)
        if (t.value() == v) return true;
    return false;
}

}  // namespace detail

inline RelationReport verify_relations(const CanonicalGens& g, const Theta& theta) {
    using detail::RelCtx;
    const int n = g.n;
    const BinPoly xn = BinPoly::xn_minus_1(n);
    RelationReport report;
    auto add = [&](std::string id, std::string statement, bool applicable, const BinPoly& divisor,
                   const detail::RelExpr& expr) {
        RelationResult r;
        r.id = std::move(id);
        r.statement = std::move(statement);
        r.applicable = applicable;
        r.divisor = divisor;
        r.plain = detail::evaluate(expr, divisor, n, false);
        r.quotient = detail::evaluate(expr, divisor, n, true);
        report.results.push_back(std::move(r));
    };

    // Shared pieces: h1 = (z^n-1)/g11, P12 = h1 g12 / g22, X = h1 g13 + P12 g23.
    auto h1 = [&](const RelCtx& c) { return c.div(xn, g.g11, "(z^n-1)/g11"); };
    auto p12 = [&](const RelCtx& c) { return c.div(c.mul(h1(c), g.g12), g.g22, "(z^n-1)/g11 * g12 / g22"); };
    auto x1 = [&](const RelCtx& c) { return c.mul(h1(c), g.g13) + c.mul(p12(c), g.g23); };
    auto q = [&](const RelCtx& c) { return c.div(g.g11, g.g22, "g11/g22"); };

    add("i", "g33 | (z^n-1)/g11 (g13 - g12/g22 g23)", true, g.g33, x1);
    add("ii", "g44 | g23", true, g.g44, [&](const RelCtx&) { return g.g23; });
    add("iii", "g33 | g11/g22 g23", true, g.g33, [&](const RelCtx& c) { return c.mul(q(c), g.g23); });
    add("iv", "g44 | (z^n-1)/g22 (g24 - g23/g33 g34)", true, g.g44, [&](const RelCtx& c) {
        const BinPoly h2 = c.div(xn, g.g22, "(z^n-1)/g22");
        return c.mul(h2, g.g24) + c.mul(c.div(c.mul(h2, g.g23), g.g33, "(z^n-1)/g22 * g23 / g33"), g.g34);
    });
    add("v", "g44 | g13 - g11/g22 g24 + g11/(g22 g33) g23 g34", true, g.g44, [&](const RelCtx& c) {
        const BinPoly qq = q(c);
        return g.g13 + c.mul(qq, g.g24) + c.mul(c.div(c.mul(qq, g.g23), g.g33, "g11/g22 * g23 / g33"), g.g34);
    });
    add("vi", "g44 | (z^n-1)/g11 (g14 - g12/g22 g24 + (g12 g23/g22 - g13)/g33 g34)", true, g.g44,
        [&](const RelCtx& c) {
            return c.mul(h1(c), g.g14) + c.mul(p12(c), g.g24) +
                   c.mul(c.div(x1(c), g.g33, "(z^n-1)/g11 * (g13 - g12 g23/g22) / g33"), g.g34);
        });

    const bool local_a = detail::theta_in(theta, {{0, 0}, {1, 0}, {0, 2}, {3, 2}});
    const bool nilpotent = detail::theta_in(theta, {{0, 0}, {3, 2}});
    const bool idem = detail::theta_in(theta, {{1, 0}, {0, 2}});
    add("vii.a", "g33 | g11  (theta in {0, 1, 2v, 3+2v})", local_a, g.g33,
        [&](const RelCtx&) { return g.g11; });
    add("vii.b", "g44 | g11  (theta in {0, 1, 2v, 3+2v})", local_a, g.g44,
        [&](const RelCtx&) { return g.g11; });
    add("vii.c", "g44 | g22  (theta in {0, 3+2v})", nilpotent, g.g44, [&](const RelCtx&) { return g.g22; });
    add("vii.d", "g44 | g22 + g23  (theta in {1, 2v})", idem, g.g44,
        [&](const RelCtx&) { return g.g22 + g.g23; });
    auto g11_over_g33 = [&](const RelCtx& c) { return c.div(g.g11, g.g33, "g11/g33"); };
    add("viii.a", "g44 | g12 + g13 - g11/g33 g34  (theta in {1, 2v})", idem, g.g44,
        [&](const RelCtx& c) { return g.g12 + g.g13 + c.mul(g11_over_g33(c), g.g34); });
    add("viii.b", "g44 | g12 - g11/g33 g34  (theta in {0, 3+2v})", nilpotent, g.g44,
        [&](const RelCtx& c) { return g.g12 + c.mul(g11_over_g33(c), g.g34); });
    add("viii.c", "g44 | g13  (theta in {v, 3v, 2+v, 2+3v})", !local_a, g.g44,
        [&](const RelCtx&) { return g.g13; });
    return report;
}

}  // namespace z4nu
