#include <gtest/gtest.h>

#include <random>

#include "z4nu/binpoly.hpp"

using namespace z4nu;

namespace {

BinPoly bp(std::uint64_t bits) {
    BinPoly p;
    for (int i = 0; i < 64; ++i)
        if ((bits >> i) & 1u) p.set(i);
    return p;
}

}  // namespace

TEST(BinPoly, DegreeAndZero) {
    EXPECT_EQ(BinPoly().degree(), kDegNegInf);
    EXPECT_TRUE(BinPoly().is_zero());
    EXPECT_EQ(BinPoly::one().degree(), 0);
    EXPECT_EQ(BinPoly::xn_minus_1(4), bp(0b10001));
    EXPECT_EQ(BinPoly::monomial(130).degree(), 130);
}

TEST(BinPoly, ArithmeticAcrossWords) {
    const BinPoly a = BinPoly::monomial(100) + BinPoly::one();
    EXPECT_EQ((a * a), BinPoly::monomial(200) + BinPoly::one());
    EXPECT_EQ(a + a, BinPoly());
    EXPECT_EQ(a.shifted(70), BinPoly::monomial(170) + BinPoly::monomial(70));
}

TEST(BinPoly, DivmodExamples) {
    // z^4 - 1 = (z + 1)^4 over Z2.
    auto [q, r] = divmod(BinPoly::xn_minus_1(4), bp(0b11));
    EXPECT_EQ(q, bp(0b1111));
    EXPECT_TRUE(r.is_zero());
    auto [q2, r2] = divmod(bp(0b1011), bp(0b11));  // z^3 + z + 1 = (z+1)(z^2+z) + 1
    EXPECT_EQ(q2, bp(0b110));
    EXPECT_EQ(r2, bp(1));
    EXPECT_THROW(divmod(bp(5), BinPoly()), DivisionByZero);
}

TEST(BinPoly, GcdExamples) {
    EXPECT_EQ(gcd(BinPoly::xn_minus_1(7), bp(0b1011)), bp(0b1011));
    EXPECT_EQ(gcd(bp(0b1011), bp(0b1101)), BinPoly::one());
    EXPECT_EQ(gcd(BinPoly(), bp(0b110)), bp(0b110));
    EXPECT_EQ(gcd(BinPoly::xn_minus_1(6), bp(0b111) * bp(0b11)), bp(0b111) * bp(0b11));
}

TEST(BinPoly, ToString) {
    EXPECT_EQ(to_string(bp(0b1011)), "z^3+z+1");
    EXPECT_EQ(to_string(BinPoly()), "0");
    EXPECT_EQ(to_string(bp(0b10)), "z");
}

TEST(BinPoly, DivmodPropertyRandom) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const BinPoly f = bp(rng() >> (rng() % 64)), d = bp((rng() >> (rng() % 64)) | 1u);
        const auto [q, r] = divmod(f, d);
        EXPECT_EQ(q * d + r, f);
        EXPECT_TRUE(r.is_zero() || r.degree() < d.degree());
    }
}

TEST(BinPoly, GcdDividesBothAndIsMaximal) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const BinPoly f = bp(rng() & 0xFFF), g = bp(rng() & 0xFFF);
        const BinPoly d = gcd(f, g);
        if (f.is_zero() && g.is_zero()) continue;
        EXPECT_TRUE(divides(d, f));
        EXPECT_TRUE(divides(d, g));
        // Every common divisor found by brute force divides d.
        for (std::uint64_t c = 2; c < 64; ++c)
            if (divides(bp(c), f) && divides(bp(c), g)) {
                EXPECT_TRUE(divides(bp(c), d));
            }
    }
}

TEST(BinPoly, DivisorsOfXnMinus1) {
    EXPECT_EQ(divisors_of_xn_minus_1(1).size(), 2u);
    // z^7 - 1 = (z+1)(z^3+z+1)(z^3+z^2+1): 8 divisors.
    EXPECT_EQ(divisors_of_xn_minus_1(7).size(), 8u);
    // z^4 - 1 = (z+1)^4: 5 divisors.
    EXPECT_EQ(divisors_of_xn_minus_1(4).size(), 5u);
    // z^6 - 1 = (z+1)^2 (z^2+z+1)^2: 9 divisors.
    EXPECT_EQ(divisors_of_xn_minus_1(6).size(), 9u);
    for (int n = 1; n <= 10; ++n)
        for (const auto& d : divisors_of_xn_minus_1(n)) EXPECT_TRUE(divides(d, BinPoly::xn_minus_1(n)));
}

TEST(BinPoly, ModXn) {
    EXPECT_EQ(BinPoly::monomial(5).mod_xn(4), bp(0b10));
    EXPECT_EQ(BinPoly::xn_minus_1(4).mod_xn(4), BinPoly());
}
