#pragma once

/**
 * @file parse.hpp
 * @brief Recursive-descent parser for polynomial expressions over R_theta.
 *
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := factor (['*'] factor)*
 *   factor := uint | 'v' | 'z' ['^' uint] | '(' expr ')'
 *
 * Whitespace is ignored and integers are taken mod 4. Juxtaposition
 * multiplies, so "2v", "3z^2" and "v(z+3)" all parse. The expression is
 * first expanded symbolically in z and v, then v^2 is replaced by theta and
 * z^n by 1.
 */

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "z4nu/cyclic_poly.hpp"
#include "z4nu/error.hpp"
#include "z4nu/ring.hpp"

namespace z4nu {

/// Sparse polynomial in z and v over Z4, keyed by (power of z, power of v).
using SymPoly = std::map<std::pair<std::uint64_t, std::uint64_t>, Z4>;

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    SymPoly parse() {
        SymPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("'+', '-', '*', factor or end of input");
        return p;
    }

private:
    static constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 32;

    [[noreturn]] void fail(const std::string& expected) const {
        const std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, expected,
                         "parse error at position " + std::to_string(pos_) + ": expected " + expected + ", found " + found);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    bool at_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'v' || c == 'z' || c == '(';
    }

    std::uint64_t uint() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("unsigned integer");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > kMaxExponent) fail("integer below 2^32");
            ++pos_;
        }
        return v;
    }

    static void add_to(SymPoly& acc, const SymPoly& x, Z4 sign) {
        for (const auto& [k, c] : x) {
            Z4& slot = acc[k];
            slot += sign * c;
            if (slot.is_zero()) acc.erase(k);
        }
    }
    SymPoly mul(const SymPoly& x, const SymPoly& y) {
        SymPoly out;
        for (const auto& [kx, cx] : x)
            for (const auto& [ky, cy] : y) {
                const std::pair<std::uint64_t, std::uint64_t> k{kx.first + ky.first, kx.second + ky.second};
                if (k.first > kMaxExponent || k.second > kMaxExponent) fail("smaller exponents");
                add_to(out, SymPoly{{k, cx * cy}}, Z4(1));
            }
        return out;
    }

    SymPoly expr() {
        SymPoly acc;
        Z4 sign(1);
        if (accept('-')) sign = Z4(3);
        add_to(acc, term(), sign);
        for (;;) {
            if (accept('+')) sign = Z4(1);
            else if (accept('-')) sign = Z4(3);
            else break;
            add_to(acc, term(), sign);
        }
        return acc;
    }

    SymPoly term() {
        SymPoly acc = factor();
        for (;;) {
            if (accept('*')) acc = mul(acc, factor());
            else if (at_factor()) acc = mul(acc, factor());
            else break;
        }
        return acc;
    }

    SymPoly factor() {
        skip();
        if (pos_ >= s_.size()) fail("integer, 'v', 'z' or '('");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Z4 v(static_cast<int>(uint() % 4));
            return v.is_zero() ? SymPoly{} : SymPoly{{{0, 0}, v}};
        }
        if (c == 'v') {
            ++pos_;
            return SymPoly{{{0, 1}, Z4(1)}};
        }
        if (c == 'z') {
            ++pos_;
            std::uint64_t e = 1;
            if (accept('^')) e = uint();
            return SymPoly{{{e, 0}, Z4(1)}};
        }
        if (c == '(') {
            ++pos_;
            SymPoly inner = expr();
            if (!accept(')')) fail("')'");
            return inner;
        }
        fail("integer, 'v', 'z' or '('");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline RElem nu_power(std::uint64_t e, const Theta& theta) {
    RElem r{1, 0}, base = RElem::nu();
    for (; e != 0; e >>= 1, base = theta.mul(base, base))
        if (e & 1u) r = theta.mul(r, base);
    return r;
}

}  // namespace detail

inline SymPoly parse_symbolic(std::string_view text) { return detail::Parser(text).parse(); }

/// The polynomial denoted by `text` in R_theta[z]/<z^n - 1>.
inline PolyR parse_poly(std::string_view text, int n, const Theta& theta) {
    const SymPoly sym = parse_symbolic(text);
    PolyR out(RRing(theta), n);
    for (const auto& [k, c] : sym) {
        const int i = static_cast<int>(k.first % static_cast<std::uint64_t>(n));
        out.set(i, out[i] + c * detail::nu_power(k.second, theta));
    }
    return out;
}

/// A constant a + v b with no z and no power of v above 1, as used for theta values.
inline RElem parse_ring_element(std::string_view text) {
    const SymPoly sym = parse_symbolic(text);
    RElem out;
    for (const auto& [k, c] : sym) {
        if (k.first != 0) throw ParseError(0, "constant", "ring element must not contain z");
        if (k.second > 1) throw ParseError(0, "a + b v", "ring element must be linear in v");
        if (k.second == 0) out.a += c;
        else out.b += c;
    }
    return out;
}

}  // namespace z4nu
