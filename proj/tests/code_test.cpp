#include <gtest/gtest.h>

#include <deque>
#include <random>

#include "z4nu/code.hpp"
#include "z4nu/oracle.hpp"
#include "z4nu/parse.hpp"
#include "z4nu/random.hpp"
#include "z4nu/z4_code.hpp"

using namespace z4nu;

namespace {

BinPoly P(const char* text) {
    // Binary polynomial from an expression with coefficients read mod 2.
    const PolyR f = parse_poly(text, 64, Theta::all()[0]);
    BinPoly p;
    for (int i = 0; i < 64; ++i)
        if (f[i].a.is_unit()) p.set(i);
    return p;
}

const Theta& theta_of(const char* text) {
    static std::deque<Theta> keep;
    keep.push_back(Theta::make(parse_ring_element(text)));
    return keep.back();
}

CodeSpec spec_of(int n, const Theta& theta, std::initializer_list<const char*> gens) {
    CodeSpec s{n, theta, {}};
    for (const char* g : gens) s.gens.push_back(parse_poly(g, n, theta));
    return s;
}

CodeSpec example1() {
    return spec_of(4, theta_of("2v"), {"z^3+z^2+z+1+v(z+3)", "2(z^2+1)+2v", "v(z^2+1)", "2v(z+1)"});
}

CanonicalGens example1_staged() {
    CanonicalGens f;
    f.n = 4;
    f.g11 = P("z^3+z^2+z+1");
    f.g13 = P("z+1");
    f.g14 = P("1");
    f.g22 = P("z^2+1");
    f.g24 = P("1");
    f.g33 = P("z^2+1");
    f.g44 = P("z+1");
    return f;
}

}  // namespace

TEST(BuildStaged, Example1GivesTheListedGenerators) {
    const CodeSpec built = build_staged(example1_staged(), theta_of("2v"));
    EXPECT_EQ(built.gens, example1().gens);
}

TEST(BuildStaged, ZeroAndFullCodes) {
    CanonicalGens zero;
    zero.n = 4;
    zero.g11 = BinPoly::xn_minus_1(4);
    EXPECT_EQ(code_module(build_staged(zero, Theta::all()[0])).log2_size(), 0);

    CanonicalGens full;
    full.n = 4;
    full.g11 = full.g22 = full.g33 = full.g44 = BinPoly::one();
    EXPECT_EQ(code_module(build_staged(full, Theta::all()[2])).log2_size(), 16);

    // g11 = 1 with g22 = 0 breaks g22 | g11.
    CanonicalGens only_g11;
    only_g11.n = 4;
    only_g11.g11 = BinPoly::one();
    EXPECT_THROW(build_staged(only_g11, Theta::all()[0]), ConditionViolation);
}

TEST(BuildStaged, NamesTheFailedCondition) {
    auto condition_of = [](const CanonicalGens& f) {
        try {
            build_staged(f, Theta::all()[0]);
        } catch (const ConditionViolation& e) {
            return e.condition();
        }
        return std::string("none");
    };
    CanonicalGens f = example1_staged();
    EXPECT_EQ(condition_of(f), "none");
    f.g22 = P("z");
    EXPECT_EQ(condition_of(f), "3.1");
    f = example1_staged();
    f.g12 = P("z^2");  // deg g12 >= deg g22
    EXPECT_EQ(condition_of(f), "3.2");
    f = example1_staged();
    f.g33 = P("z^2+z+1");
    EXPECT_EQ(condition_of(f), "3.3");
    f = example1_staged();
    f.g34 = P("z");  // deg g34 >= deg g44
    EXPECT_EQ(condition_of(f), "3.4");
}

TEST(Towers, Example1MatchesEnumeration) {
    const CodeSpec c = example1();
    const Towers t = towers(c);
    EXPECT_EQ(t, brute_force_towers(enumerate_code(c)));
    EXPECT_EQ(t.g11, P("z^3+z^2+z+1"));
    EXPECT_EQ(t.g22, P("z^2+1"));
    EXPECT_EQ(t.g33, P("z^2+1"));
    // The code contains 2v, so the last tower is everything.
    EXPECT_EQ(t.g44, BinPoly::one());
    EXPECT_TRUE(membership_r(c, parse_poly("2v", 4, c.theta)));
}

TEST(Towers, Example4MatchesEnumeration) {
    const CodeSpec c = spec_of(6, theta_of("0"), {"z^5+z^4+z^3+z^2+z+1+v(z^2+z+1)+2vz", "2(z^4+z^2+1)",
                                                  "v(z^3+3)", "2v(z^2+z+1)"});
    const Towers t = towers(c);
    EXPECT_EQ(t, brute_force_towers(enumerate_code(c)));
    EXPECT_EQ(t.g11, P("z^5+z^4+z^3+z^2+z+1"));
    EXPECT_EQ(t.g22, P("z^4+z^2+1"));
    EXPECT_EQ(t.g33, P("z^3+1"));
    EXPECT_EQ(t.g44, BinPoly::one());
}

TEST(Towers, ZeroCode) {
    const CodeSpec c = spec_of(4, Theta::all()[0], {"0"});
    const BinPoly xn = BinPoly::xn_minus_1(4);
    EXPECT_EQ(towers(c), (Towers{xn, xn, xn, xn}));
}

TEST(Towers, AgreeWithEnumerationOnRandomCodes) {
    for (const auto& theta : Theta::all())
        for (int n = 1; n <= 5; ++n)
            for (int i = 0; i < 8; ++i) {
                auto rng = sample_rng(101, n, theta_index(theta), i);
                const CodeSpec c = random_code(rng, n, theta);
                ASSERT_EQ(towers(c), brute_force_towers(enumerate_code(c))) << theta << " n " << n << " i " << i;
            }
}

TEST(ReduceUnique, ShiftOfG3IsRemovedFromG13) {
    const Theta& theta = theta_of("3+2v");
    CanonicalGens f;
    f.n = 4;
    f.g11 = P("z^3+z^2+z+1");
    f.g13 = P("z^2+z");
    f.g22 = P("z^2+1");
    f.g33 = P("z+1");
    f.g44 = P("1");
    const CanonicalGens g = reduce_unique(f);
    EXPECT_TRUE(g.g13.is_zero());
    EXPECT_EQ(enumerate_code(build_staged(f, theta)), enumerate_code(build_staged(g, theta)));
}

TEST(ReduceUnique, Example2IsAlreadyReduced) {
    const Theta& theta = theta_of("3+2v");
    CanonicalGens f;
    f.n = 4;
    f.g11 = P("z^3+z^2+z+1");
    f.g13 = P("1");
    f.g22 = P("z^2+1");
    f.g33 = P("z+1");
    f.g44 = P("1");
    EXPECT_EQ(reduce_unique(f), f);
    const CodeSpec c = spec_of(4, theta, {"z^3+z^2+z+1+(1+v)", "2(z^2+1)", "(1+v)(z+1)", "2(1+v)"});
    EXPECT_EQ(canonicalize(c), f);
}

TEST(ReduceUnique, ZeroCode) {
    CanonicalGens f;
    f.n = 3;
    f.g11 = f.g22 = f.g33 = f.g44 = BinPoly::xn_minus_1(3);
    EXPECT_EQ(reduce_unique(f), f);
    EXPECT_EQ(canonicalize(spec_of(3, Theta::all()[5], {"0"})), f);
}

TEST(ReduceUnique, KeepsTheCodeAndIsIdempotent) {
    for (const auto& theta : Theta::all())
        for (int n = 1; n <= 5; ++n)
            for (int i = 0; i < 6; ++i) {
                auto rng = sample_rng(202, n, theta_index(theta), i);
                const CanonicalGens f = random_staged(rng, n);
                const CanonicalGens g = reduce_unique(f);
                EXPECT_EQ(reduce_unique(g), g);
                EXPECT_TRUE(degree_violations(g).empty());
                EXPECT_EQ(enumerate_code(build_staged(f, theta)), enumerate_code(build_staged(g, theta)));
            }
}

TEST(Canonicalize, Examples) {
    const CanonicalGens full = canonicalize(spec_of(3, Theta::all()[1], {"1"}));
    for (const BinPoly* d : {&full.g11, &full.g22, &full.g33, &full.g44}) EXPECT_EQ(*d, BinPoly::one());
    for (const BinPoly* o : {&full.g12, &full.g13, &full.g14, &full.g23, &full.g24, &full.g34})
        EXPECT_TRUE(o->is_zero());

    const CanonicalGens two_k = canonicalize(spec_of(1, Theta::all()[0], {"2v"}));
    const BinPoly x1 = BinPoly::xn_minus_1(1);
    EXPECT_EQ(two_k.g11, x1);
    EXPECT_EQ(two_k.g22, x1);
    EXPECT_EQ(two_k.g33, x1);
    EXPECT_EQ(two_k.g44, BinPoly::one());
}

TEST(Canonicalize, Example1WithCombinedGenerator) {
    const CodeSpec c = example1();
    CodeSpec d = c;
    d.gens[0] += d.gens[2];
    EXPECT_EQ(canonicalize(d), canonicalize(c));
    EXPECT_EQ(enumerate_code(d), enumerate_code(c));
}

TEST(Canonicalize, InvariantUnderGeneratorRewrites) {
    for (const auto& theta : Theta::all())
        for (int n = 1; n <= 6; ++n)
            for (int i = 0; i < 10; ++i) {
                auto rng = sample_rng(303, n, theta_index(theta), i);
                const CodeSpec c = random_code(rng, n, theta);
                const CanonicalGens g = canonicalize(c);
                EXPECT_EQ(canonicalize(permuted(c, rng)), g);
                EXPECT_EQ(canonicalize(with_redundant(c, rng)), g);
                EXPECT_EQ(canonicalize(mixed(c, rng)), g);
            }
}

TEST(Canonicalize, OutputDescribesTheCode) {
    for (const auto& theta : Theta::all())
        for (int n = 1; n <= 5; ++n)
            for (int i = 0; i < 8; ++i) {
                auto rng = sample_rng(404, n, theta_index(theta), i);
                const CodeSpec c = random_code(rng, n, theta);
                const CanonicalGens g = canonicalize(c);
                const BinPoly xn = BinPoly::xn_minus_1(n);
                EXPECT_EQ(g.towers(), towers(c));
                EXPECT_TRUE(degree_violations(g).empty());
                EXPECT_TRUE(divides(g.g22, g.g11) && divides(g.g11, xn));
                EXPECT_TRUE(divides(g.g44, g.g33) && divides(g.g33, xn));
                EXPECT_TRUE(z4_admissible_carry({g.g11, g.g12, g.g22}, n));
                EXPECT_TRUE(z4_admissible_carry({g.g33, g.g34, g.g44}, n));
                const auto gens = staged_generators(g, theta);
                EXPECT_EQ(code_module(CodeSpec{n, theta, {gens.begin(), gens.end()}}), code_module(c));
            }
}

TEST(Membership, AgreesWithEnumeration) {
    const CodeSpec c = example1();
    EXPECT_TRUE(membership_r(c, parse_poly("2v(z+1)", 4, c.theta)));
    EXPECT_TRUE(membership_r(c, parse_poly("0", 4, c.theta)));
    const CodewordSet words = enumerate_code(c);
    const WordOps ops(4, c.theta);
    const PolyR nu = parse_poly("v", 4, c.theta);
    EXPECT_EQ(membership_r(c, nu), words.contains(ops.pack(nu)));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const PolyR w = random_poly(rng, 4, c.theta);
        EXPECT_EQ(membership_r(c, w), words.contains(ops.pack(w)));
    }
    EXPECT_THROW(membership_r(c, parse_poly("1", 5, c.theta)), MismatchError);
}
