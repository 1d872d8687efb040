#pragma once

/**
 * @file cyclic_poly.hpp
 * @brief Dense polynomials in K[z]/<z^n - 1> for K in {Z2, Z4, R_theta}.
 *
 * The coefficient ring is a small descriptor object. For R_theta it carries
 * theta; two polynomials combine only when their lengths and rings agree.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "z4nu/binpoly.hpp"
#include "z4nu/error.hpp"
#include "z4nu/ring.hpp"

namespace z4nu {

struct Z2Ring {
    using value_type = std::uint8_t;
    static constexpr value_type zero() { return 0; }
    static constexpr value_type one() { return 1; }
    static constexpr value_type add(value_type x, value_type y) { return x ^ y; }
    static constexpr value_type sub(value_type x, value_type y) { return x ^ y; }
    static constexpr value_type mul(value_type x, value_type y) { return x & y; }
    static constexpr bool is_zero(value_type x) { return x == 0; }
    friend constexpr bool operator==(Z2Ring, Z2Ring) { return true; }
};

struct Z4Ring {
    using value_type = Z4;
    static constexpr value_type zero() { return Z4(0); }
    static constexpr value_type one() { return Z4(1); }
    static constexpr value_type add(value_type x, value_type y) { return x + y; }
    static constexpr value_type sub(value_type x, value_type y) { return x - y; }
    static constexpr value_type mul(value_type x, value_type y) { return x * y; }
    static constexpr bool is_zero(value_type x) { return x.is_zero(); }
    friend constexpr bool operator==(Z4Ring, Z4Ring) { return true; }
};

class RRing {
public:
    using value_type = RElem;
    explicit RRing(Theta theta) : theta_(theta) {}
    const Theta& theta() const { return theta_; }
    static constexpr value_type zero() { return {0, 0}; }
    static constexpr value_type one() { return {1, 0}; }
    static constexpr value_type add(value_type x, value_type y) { return x + y; }
    static constexpr value_type sub(value_type x, value_type y) { return x - y; }
    value_type mul(value_type x, value_type y) const { return theta_.mul(x, y); }
    static constexpr bool is_zero(value_type x) { return x.is_zero(); }
    friend bool operator==(const RRing& x, const RRing& y) { return x.theta_ == y.theta_; }

private:
    Theta theta_;
};

template <class Ring>
class CyclicPoly {
public:
    using value_type = typename Ring::value_type;

    CyclicPoly(Ring ring, int n) : ring_(std::move(ring)), n_(n), c_(static_cast<std::size_t>(n), Ring::zero()) {
        if (n < 1) throw Error("length n must be at least 1");
    }

    /// Coefficients in ascending powers; entries at index >= n fold onto i mod n.
    CyclicPoly(Ring ring, int n, const std::vector<value_type>& coeffs) : CyclicPoly(std::move(ring), n) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            auto& slot = c_[i % static_cast<std::size_t>(n_)];
            slot = Ring::add(slot, coeffs[i]);
        }
    }

    static CyclicPoly monomial(Ring ring, int n, value_type c, int power) {
        CyclicPoly p(std::move(ring), n);
        p.c_[static_cast<std::size_t>(((power % n) + n) % n)] = c;
        return p;
    }

    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    const std::vector<value_type>& coeffs() const { return c_; }
    value_type operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    void set(int i, value_type v) { c_[static_cast<std::size_t>(i)] = v; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!Ring::is_zero(x)) return false;
        return true;
    }
    /// Degree of the representative of degree < n.
    int degree() const {
        for (int i = n_ - 1; i >= 0; --i)
            if (!Ring::is_zero(c_[static_cast<std::size_t>(i)])) return i;
        return kDegNegInf;
    }

    CyclicPoly& operator+=(const CyclicPoly& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = Ring::add(c_[i], o.c_[i]);
        return *this;
    }
    CyclicPoly& operator-=(const CyclicPoly& o) {
        check_compatible(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = Ring::sub(c_[i], o.c_[i]);
        return *this;
    }
    friend CyclicPoly operator+(CyclicPoly x, const CyclicPoly& y) { return x += y; }
    friend CyclicPoly operator-(CyclicPoly x, const CyclicPoly& y) { return x -= y; }
    CyclicPoly operator-() const { return CyclicPoly(ring_, n_) - *this; }

    /// Product reduced mod z^n - 1.
    friend CyclicPoly operator*(const CyclicPoly& x, const CyclicPoly& y) {
        x.check_compatible(y);
        CyclicPoly r(x.ring_, x.n_);
        const auto n = static_cast<std::size_t>(x.n_);
        for (std::size_t i = 0; i < n; ++i) {
            if (Ring::is_zero(x.c_[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (Ring::is_zero(y.c_[j])) continue;
                auto& slot = r.c_[(i + j) % n];
                slot = Ring::add(slot, x.ring_.mul(x.c_[i], y.c_[j]));
            }
        }
        return r;
    }

    CyclicPoly scaled(value_type s) const {
        CyclicPoly r(ring_, n_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = ring_.mul(s, c_[i]);
        return r;
    }

    /// Multiplication by z^k, a cyclic shift of the coefficient vector.
    CyclicPoly shifted(int k) const {
        CyclicPoly r(ring_, n_);
        const auto n = static_cast<std::size_t>(n_);
        const auto s = static_cast<std::size_t>(((k % n_) + n_) % n_);
        for (std::size_t i = 0; i < n; ++i) r.c_[(i + s) % n] = c_[i];
        return r;
    }

    friend bool operator==(const CyclicPoly& x, const CyclicPoly& y) {
        return x.n_ == y.n_ && x.ring_ == y.ring_ && x.c_ == y.c_;
    }

private:
    void check_compatible(const CyclicPoly& o) const {
        if (n_ != o.n_) throw MismatchError("polynomials have different lengths " + std::to_string(n_) +
                                            " and " + std::to_string(o.n_));
        if (!(ring_ == o.ring_)) throw MismatchError("polynomials are over different rings");
    }

    Ring ring_;
    int n_;
    std::vector<value_type> c_;
};

using PolyZ2 = CyclicPoly<Z2Ring>;
using PolyZ4 = CyclicPoly<Z4Ring>;
using PolyR = CyclicPoly<RRing>;

// --- conversions ------------------------------------------------------------

/// Image of a binary polynomial in Z2[z]/<z^n - 1>.
inline PolyZ2 to_cyclic(const BinPoly& p, int n) {
    const BinPoly r = p.mod_xn(n);
    PolyZ2 out(Z2Ring{}, n);
    for (int i = 0; i < n; ++i) out.set(i, r.coeff(i) ? 1 : 0);
    return out;
}

inline BinPoly to_binpoly(const PolyZ2& p) {
    BinPoly out;
    for (int i = 0; i < p.n(); ++i)
        if (p[i]) out.set(i);
    return out;
}

/// Residue mod 2 of a Z4 polynomial.
inline BinPoly residue(const PolyZ4& p) {
    BinPoly out;
    for (int i = 0; i < p.n(); ++i)
        if (p[i].is_unit()) out.set(i);
    return out;
}

/// 0/1 lift of a binary polynomial reduced mod z^n - 1, viewed over Z4.
inline PolyZ4 lift_z4(const BinPoly& p, int n) {
    const BinPoly r = p.mod_xn(n);
    PolyZ4 out(Z4Ring{}, n);
    for (int i = 0; i < n; ++i)
        if (r.coeff(i)) out.set(i, Z4(1));
    return out;
}

/// Embeds Z4[z]/<z^n - 1> into R_theta[z]/<z^n - 1> scaled by s: returns s * f.
inline PolyR embed(const PolyZ4& f, const Theta& theta, RElem s = {1, 0}) {
    PolyR out(RRing(theta), f.n());
    for (int i = 0; i < f.n(); ++i) out.set(i, theta.mul(s, RElem{f[i], Z4(0)}));
    return out;
}

inline std::string to_string(const PolyZ4& p) {
    std::string out;
    for (int i = p.n() - 1; i >= 0; --i) {
        const int c = p[i].value();
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        const std::string mono = i == 0 ? "" : i == 1 ? "z" : "z^" + std::to_string(i);
        if (mono.empty()) out += std::to_string(c);
        else if (c == 1) out += mono;
        else out += std::to_string(c) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

/// Renders as an expression the polynomial parser reads back,
/// e.g. "z^3+z^2+(1+v)*z+(1+3*v)".
inline std::string to_string(const PolyR& p) {
    std::string out;
    for (int i = p.n() - 1; i >= 0; --i) {
        const RElem c = p[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        const int a = c.a.value();
        const int b = c.b.value();
        std::string coef;
        if (b == 0) coef = std::to_string(a);
        else {
            const std::string nu = b == 1 ? "v" : std::to_string(b) + "*v";
            coef = a == 0 ? nu : "(" + std::to_string(a) + "+" + nu + ")";
        }
        if (i == 0) {
            out += coef;
            continue;
        }
        const std::string mono = i == 1 ? "z" : "z^" + std::to_string(i);
        if (a == 1 && b == 0) out += mono;
        else out += coef + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

// --- the four-plane decomposition --------------------------------------------

/**
 * Binary planes of f = p1 + 2 p2 + k p3 + 2k p4.
 *
 * Writing each coefficient as c + k d (c, d in Z4), the planes are the binary
 * digits c = p1 + 2 p2, d = p3 + 2 p4. Each plane has degree < n.
 */
struct Decomposition {
    BinPoly p1, p2, p3, p4;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Decomposition decompose(const PolyR& f) {
    const Theta& theta = f.ring().theta();
    Decomposition d;
    for (int i = 0; i < f.n(); ++i) {
        const auto [c, k] = theta.split(f[i]);
        if (c.value() & 1) d.p1.set(i);
        if (c.value() & 2) d.p2.set(i);
        if (k.value() & 1) d.p3.set(i);
        if (k.value() & 2) d.p4.set(i);
    }
    return d;
}

/// Inverse of decompose. Planes are reduced mod z^n - 1 first, so a plane equal
/// to z^n - 1 (the zero-ideal generator) contributes nothing.
inline PolyR compose(const Decomposition& d, const Theta& theta, int n) {
    const BinPoly q1 = d.p1.mod_xn(n), q2 = d.p2.mod_xn(n), q3 = d.p3.mod_xn(n), q4 = d.p4.mod_xn(n);
    PolyR out(RRing(theta), n);
    for (int i = 0; i < n; ++i) {
        const Z4 c(static_cast<int>(q1.coeff(i)) + 2 * static_cast<int>(q2.coeff(i)));
        const Z4 k(static_cast<int>(q3.coeff(i)) + 2 * static_cast<int>(q4.coeff(i)));
        out.set(i, theta.join(c, k));
    }
    return out;
}

}  // namespace z4nu
