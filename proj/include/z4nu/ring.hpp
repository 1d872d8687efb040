#pragma once

/**
 * @file ring.hpp
 * @brief Arithmetic in Z4 and in R_theta = Z4 + nu Z4 with nu^2 = theta.
 *
 * Every element of R_theta is written a + nu b with a, b in Z4. Multiplication
 * needs theta, so it lives on Theta rather than on RElem itself.
 */

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "z4nu/error.hpp"

namespace z4nu {

/// Residue mod 4. Arithmetic wraps.
class Z4 {
public:
    constexpr Z4() = default;
    constexpr Z4(int v) : v_(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {}

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }
    constexpr bool is_unit() const { return (v_ & 1) != 0; }

    friend constexpr Z4 operator+(Z4 x, Z4 y) { return Z4(x.v_ + y.v_); }
    friend constexpr Z4 operator-(Z4 x, Z4 y) { return Z4(x.v_ + 4 - y.v_); }
    friend constexpr Z4 operator*(Z4 x, Z4 y) { return Z4(x.v_ * y.v_); }
    constexpr Z4 operator-() const { return Z4(4 - v_); }
    constexpr Z4& operator+=(Z4 y) { return *this = *this + y; }
    constexpr Z4& operator-=(Z4 y) { return *this = *this - y; }
    friend constexpr bool operator==(Z4, Z4) = default;

private:
    std::uint8_t v_ = 0;
};

/// a + nu b.
struct RElem {
    Z4 a;
    Z4 b;

    constexpr RElem() = default;
    constexpr RElem(Z4 a_, Z4 b_) : a(a_), b(b_) {}
    constexpr RElem(int a_, int b_) : a(a_), b(b_) {}

    static constexpr RElem nu() { return {0, 1}; }

    constexpr bool is_zero() const { return a.is_zero() && b.is_zero(); }
    /// 4-bit code a | b << 2, used for packing codewords.
    constexpr unsigned code() const { return static_cast<unsigned>(a.value() | (b.value() << 2)); }
    static constexpr RElem from_code(unsigned c) { return {static_cast<int>(c & 3u), static_cast<int>((c >> 2) & 3u)}; }

    friend constexpr RElem operator+(RElem x, RElem y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr RElem operator-(RElem x, RElem y) { return {x.a - y.a, x.b - y.b}; }
    constexpr RElem operator-() const { return {-a, -b}; }
    /// Scalar action of Z4, which does not depend on theta.
    friend constexpr RElem operator*(Z4 s, RElem x) { return {s * x.a, s * x.b}; }
    friend constexpr bool operator==(RElem, RElem) = default;
};

inline std::string to_string(RElem x);

inline std::ostream& operator<<(std::ostream& os, RElem x) { return os << to_string(x); }

enum class RingClass { chain, non_chain };

/// Chain/non-chain classification of Z4 + nu Z4 by the value of nu^2.
constexpr RingClass classify(RElem candidate) {
    constexpr std::array<RElem, 8> non_chain = {
        RElem{0, 0}, RElem{1, 0}, RElem{0, 1}, RElem{0, 2},
        RElem{0, 3}, RElem{2, 1}, RElem{2, 3}, RElem{3, 2}};
    for (RElem x : non_chain)
        if (x == candidate) return RingClass::non_chain;
    return RingClass::chain;
}

/**
 * The value of nu^2, restricted to the eight values for which R_theta is not a
 * chain ring. Carries the distinguished element k_theta used to split R_theta
 * as Z4 + k_theta Z4.
 */
class Theta {
public:
    /// Throws ChainRingError for the eight chain-ring values.
    static Theta make(RElem value);

    /// The eight admissible values in the order 0, 1, v, 2v, 3v, 2+v, 2+3v, 3+2v.
    static const std::array<Theta, 8>& all();

    constexpr RElem value() const { return value_; }

    /// k_theta: v for theta in {0, v, 2v, 3v}; 1+v for {1, 3+2v}; 2+v for {2+v, 2+3v}.
    constexpr RElem k() const { return {k_offset_, 1}; }

    /// The constant part t of k_theta = t + v.
    constexpr int k_offset() const { return k_offset_; }

    /// True when k_theta^2 is 0 or 2 k_theta, i.e. theta in {0, 1, 2v, 3+2v}.
    /// For the other four theta, 2 k^2 = 2 k and R_theta splits as Z4 x Z4.
    constexpr bool local() const { return local_; }

    constexpr RElem mul(RElem x, RElem y) const {
        const Z4 bd = x.b * y.b;
        return {x.a * y.a + value_.a * bd, x.a * y.b + x.b * y.a + value_.b * bd};
    }

    /// phi_theta: the ring homomorphism onto Z4 that kills k_theta.
    /// a + v b = (a - t b) + k b, so phi(a + v b) = a - t b.
    constexpr Z4 phi(RElem x) const { return x.a - Z4(k_offset_) * x.b; }

    /// Coordinates (c, d) of x = c + k d.
    constexpr std::pair<Z4, Z4> split(RElem x) const { return {phi(x), x.b}; }
    constexpr RElem join(Z4 c, Z4 d) const { return {c + Z4(k_offset_) * d, d}; }

    friend constexpr bool operator==(const Theta& x, const Theta& y) { return x.value_ == y.value_; }

    std::string name() const { return to_string(value_); }

private:
    constexpr Theta(RElem v, int offset, bool local) : value_(v), k_offset_(offset), local_(local) {}

    RElem value_;
    int k_offset_ = 0;
    bool local_ = true;
};

// --- inline definitions -----------------------------------------------------

inline std::string to_string(RElem x) {
    const int a = x.a.value();
    const int b = x.b.value();
    if (b == 0) return std::to_string(a);
    std::string nu = b == 1 ? "v" : std::to_string(b) + "v";
    if (a == 0) return nu;
    return std::to_string(a) + "+" + nu;
}

inline Theta Theta::make(RElem value) {
    if (classify(value) == RingClass::chain)
        throw ChainRingError("Z4 + vZ4 with v^2 = " + to_string(value) +
                             " is a chain ring; chain values are {2, 3, 1+v, 1+2v, 1+3v, 2+2v, 3+v, 3+3v}, "
                             "supported values are {0, 1, v, 2v, 3v, 2+v, 2+3v, 3+2v}");
    const int a = value.a.value();
    const int b = value.b.value();
    if (a == 0) return Theta(value, 0, b == 0 || b == 2);          // 0, v, 2v, 3v
    if ((a == 1 && b == 0) || (a == 3 && b == 2)) return Theta(value, 1, true);
    return Theta(value, 2, false);                                   // 2+v, 2+3v
}

inline const std::array<Theta, 8>& Theta::all() {
    static const std::array<Theta, 8> values = {
        make({0, 0}), make({1, 0}), make({0, 1}), make({0, 2}),
        make({0, 3}), make({2, 1}), make({2, 3}), make({3, 2})};
    return values;
}

inline std::ostream& operator<<(std::ostream& os, const Theta& t) { return os << t.name(); }

}  // namespace z4nu
