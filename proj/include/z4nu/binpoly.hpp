#pragma once

/**
 * @file binpoly.hpp
 * @brief Plain polynomials over Z2 (no quotient), packed 64 coefficients per word.
 *
 * These carry the tower generators and the off-diagonal parts of the staged
 * generator form. A generator of the zero ideal of Z2[z]/<z^n - 1> is stored
 * as z^n + 1 itself, so its degree is n.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "z4nu/error.hpp"

namespace z4nu {

/// Degree of the zero polynomial; ordered below every natural number.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

class BinPoly {
public:
    BinPoly() = default;

    /// Coefficients in ascending powers; any nonzero entry counts as 1.
    template <class Int>
    static BinPoly from_coeffs(const std::vector<Int>& coeffs) {
        BinPoly p;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] % 2 != 0) p.set(static_cast<int>(i));
        return p;
    }

    static BinPoly monomial(int power) {
        BinPoly p;
        p.set(power);
        return p;
    }
    static BinPoly one() { return monomial(0); }
    /// z^n - 1 = z^n + 1 over Z2.
    static BinPoly xn_minus_1(int n) {
        BinPoly p = monomial(n);
        p.flip(0);
        return p;
    }

    bool is_zero() const { return w_.empty(); }
    int degree() const {
        if (w_.empty()) return kDegNegInf;
        return static_cast<int>(64 * (w_.size() - 1)) + 63 - std::countl_zero(w_.back());
    }
    bool coeff(int i) const {
        const auto word = static_cast<std::size_t>(i) / 64;
        return word < w_.size() && ((w_[word] >> (i % 64)) & 1u);
    }
    void set(int i, bool v = true) {
        if (coeff(i) != v) flip(i);
    }
    void flip(int i) {
        const auto word = static_cast<std::size_t>(i) / 64;
        if (word >= w_.size()) w_.resize(word + 1, 0);
        w_[word] ^= std::uint64_t{1} << (i % 64);
        trim();
    }

    BinPoly& operator+=(const BinPoly& o) {
        if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
        for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
        trim();
        return *this;
    }
    friend BinPoly operator+(BinPoly x, const BinPoly& y) { return x += y; }
    /// Subtraction is addition in characteristic 2.
    friend BinPoly operator-(BinPoly x, const BinPoly& y) { return x += y; }

    BinPoly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        BinPoly r;
        const std::size_t ws = static_cast<std::size_t>(k) / 64;
        const int bs = k % 64;
        r.w_.assign(w_.size() + ws + 1, 0);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            r.w_[i + ws] |= w_[i] << bs;
            if (bs != 0) r.w_[i + ws + 1] |= w_[i] >> (64 - bs);
        }
        r.trim();
        return r;
    }

    friend BinPoly operator*(const BinPoly& x, const BinPoly& y) {
        BinPoly r;
        if (x.is_zero() || y.is_zero()) return r;
        const int dy = y.degree();
        for (int i = 0; i <= dy; ++i)
            if (y.coeff(i)) r += x.shifted(i);
        return r;
    }

    /// Reduction modulo z^n - 1: powers fold onto i mod n.
    BinPoly mod_xn(int n) const {
        if (degree() < n) return *this;
        BinPoly r;
        const int d = degree();
        for (int i = 0; i <= d; ++i)
            if (coeff(i)) r.flip(i % n);
        return r;
    }

    std::vector<int> bits(int length) const {
        std::vector<int> out(static_cast<std::size_t>(length), 0);
        for (int i = 0; i < length; ++i) out[static_cast<std::size_t>(i)] = coeff(i) ? 1 : 0;
        return out;
    }

    friend bool operator==(const BinPoly&, const BinPoly&) = default;
    friend bool operator<(const BinPoly& x, const BinPoly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        for (std::size_t i = x.w_.size(); i-- > 0;)
            if (x.w_[i] != y.w_[i]) return x.w_[i] < y.w_[i];
        return false;
    }

private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<std::uint64_t> w_;
};

struct BinDivMod {
    BinPoly quotient;
    BinPoly remainder;
};

/// Long division in Z2[z]; f = q d + r with r = 0 or deg r < deg d.
inline BinDivMod divmod(BinPoly f, const BinPoly& d) {
    if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
    BinPoly q;
    const int dd = d.degree();
    while (!f.is_zero() && f.degree() >= dd) {
        const int shift = f.degree() - dd;
        q.flip(shift);
        f += d.shifted(shift);
    }
    return {std::move(q), std::move(f)};
}

inline BinPoly operator%(const BinPoly& f, const BinPoly& d) { return divmod(f, d).remainder; }

inline bool divides(const BinPoly& d, const BinPoly& f) { return (f % d).is_zero(); }

/// Quotient f / d; throws when d does not divide f.
inline BinPoly exact_quotient(const BinPoly& f, const BinPoly& d) {
    auto [q, r] = divmod(f, d);
    if (!r.is_zero()) throw Error("inexact division");
    return q;
}

/// Monic gcd (every nonzero binary polynomial is monic).
inline BinPoly gcd(BinPoly f, BinPoly g) {
    if (f.is_zero() && g.is_zero()) throw DivisionByZero("gcd(0, 0) is undefined");
    while (!g.is_zero()) {
        BinPoly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

/// e.g. "z^3+z+1"; "0" for zero.
inline std::string to_string(const BinPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out += "+";
        if (i == 0) out += "1";
        else if (i == 1) out += "z";
        else out += "z^" + std::to_string(i);
    }
    return out;
}

/// All monic divisors of z^n - 1 in Z2[z], including 1 and z^n - 1, by degree.
inline std::vector<BinPoly> divisors_of_xn_minus_1(int n) {
    const BinPoly xn = BinPoly::xn_minus_1(n);
    std::vector<BinPoly> out;
    if (n > 20) throw Error("divisor enumeration is limited to n <= 20");
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << (n + 1)); ++m) {
        BinPoly d;
        for (int i = 0; i <= n; ++i)
            if ((m >> i) & 1u) d.flip(i);
        if (divides(d, xn)) out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace z4nu
