#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force enumeration of small codes, used to check everything else.
 *
 * Nothing here goes through the Howell engine or the closed forms except the
 * size guard, which asks the engine for the predicted size before enumerating.
 * A word of length n <= 16 is packed in a uint64, four bits per coordinate
 * (a in bits 0-1, b in bits 2-3 for a + v b).
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "z4nu/binpoly.hpp"
#include "z4nu/code.hpp"
#include "z4nu/cyclic_poly.hpp"
#include "z4nu/error.hpp"
#include "z4nu/ring.hpp"

namespace z4nu {

inline constexpr int kOracleMaxLength = 16;
inline constexpr std::uint64_t kDefaultOracleLimit = std::uint64_t{1} << 20;

using Word = std::uint64_t;

/// Word-level arithmetic for one (n, theta).
class WordOps {
public:
    WordOps(int n, const Theta& theta) : n_(n), theta_(theta) {
        if (n < 1 || n > kOracleMaxLength)
            throw Error("the oracle handles lengths 1.." + std::to_string(kOracleMaxLength));
        mask_ = n == 16 ? ~Word{0} : (Word{1} << (4 * n)) - 1;
        for (unsigned x = 0; x < 16; ++x)
            for (unsigned y = 0; y < 16; ++y)
                mul_[x][y] = static_cast<std::uint8_t>(theta.mul(RElem::from_code(x), RElem::from_code(y)).code());
    }

    int n() const { return n_; }
    const Theta& theta() const { return theta_; }
    int bits() const { return 4 * n_; }

    /// Lane-wise addition mod 4 on 2-bit lanes.
    static Word add(Word x, Word y) {
        constexpr Word lo = 0x5555555555555555ULL, hi = 0xAAAAAAAAAAAAAAAAULL;
        const Word carry = (x & y & lo) << 1;
        return ((x ^ y) & lo) | (((x ^ y) & hi) ^ carry);
    }
    Word times(unsigned s, Word w) const {
        Word out = 0;
        for (int i = 0; i < n_; ++i) out |= Word{mul_[s][(w >> (4 * i)) & 15u]} << (4 * i);
        return out;
    }
    Word negate(Word w) const { return times(RElem{3, 0}.code(), w); }
    /// Multiplication by z.
    Word shift(Word w) const {
        if (n_ == 1) return w;
        return ((w << 4) | (w >> (4 * (n_ - 1)))) & mask_;
    }

    Word pack(const PolyR& f) const {
        if (f.n() != n_ || !(f.ring().theta() == theta_)) throw MismatchError("word does not match the oracle");
        Word w = 0;
        for (int i = 0; i < n_; ++i) w |= Word{f[i].code()} << (4 * i);
        return w;
    }
    PolyR unpack(Word w) const {
        PolyR f(RRing(theta_), n_);
        for (int i = 0; i < n_; ++i) f.set(i, RElem::from_code(static_cast<unsigned>((w >> (4 * i)) & 15u)));
        return f;
    }

private:
    int n_;
    Theta theta_;
    Word mask_ = 0;
    std::uint8_t mul_[16][16] = {};
};

namespace detail {

/// Membership set: a bitmap for words of at most 24 bits, a hash set above.
class WordSet {
public:
    explicit WordSet(int bits) : dense_(bits <= 24) {
        if (dense_) bitmap_.assign((std::size_t{1} << bits) / 64 + 1, 0);
    }
    bool contains(Word w) const {
        if (dense_) return (bitmap_[w / 64] >> (w % 64)) & 1u;
        return hashed_.count(w) != 0;
    }
    bool insert(Word w) {
        if (contains(w)) return false;
        if (dense_) bitmap_[w / 64] |= Word{1} << (w % 64);
        else hashed_.insert(w);
        return true;
    }

private:
    bool dense_;
    std::vector<Word> bitmap_;
    std::unordered_set<Word> hashed_;
};

/// Z4-span of `vecs`, built one generator at a time.
inline std::vector<Word> z4_span(const WordOps& ops, const std::vector<Word>& vecs, std::uint64_t limit) {
    WordSet seen(ops.bits());
    std::vector<Word> words{0};
    seen.insert(0);
    for (Word v : vecs) {
        if (seen.contains(v)) continue;
        const std::size_t base = words.size();
        Word m = 0;
        for (int c = 1; c < 4; ++c) {
            m = WordOps::add(m, v);
            for (std::size_t i = 0; i < base; ++i) {
                const Word w = WordOps::add(words[i], m);
                if (seen.insert(w)) words.push_back(w);
            }
        }
        if (words.size() > limit) throw LimitExceeded(-1, "enumeration exceeded the word limit");
    }
    return words;
}

/// Z4 generators of the R-linear span of `set` (each b and v b), without shifts.
inline std::vector<Word> linear_generators(const WordOps& ops, const std::vector<Word>& set) {
    std::vector<Word> out;
    for (Word b : set) {
        out.push_back(b);
        out.push_back(ops.times(RElem::nu().code(), b));
    }
    return out;
}

}  // namespace detail

/// All codewords of a code, sorted by packed value.
struct CodewordSet {
    int n;
    Theta theta;
    std::vector<Word> words;

    std::size_t size() const { return words.size(); }
    bool contains(Word w) const { return std::binary_search(words.begin(), words.end(), w); }
    friend bool operator==(const CodewordSet& x, const CodewordSet& y) {
        return x.n == y.n && x.theta == y.theta && x.words == y.words;
    }
};

/// Fixed-point closure of the generators under +, scalar multiplication and shift.
/// Refuses when the size predicted by the echelon form exceeds `limit`.
inline CodewordSet enumerate_code(const CodeSpec& spec, std::uint64_t limit = kDefaultOracleLimit) {
    const WordOps ops(spec.n, spec.theta);
    const int predicted = code_module(spec).log2_size();
    if (predicted >= 63 || (std::uint64_t{1} << predicted) > limit)
        throw LimitExceeded(predicted, "code has 2^" + std::to_string(predicted) + " words, above the limit of " +
                                           std::to_string(limit));
    std::vector<Word> vecs;
    for (const auto& g : spec.gens) {
        Word w = ops.pack(g);
        for (int j = 0; j < spec.n; ++j, w = ops.shift(w)) {
            vecs.push_back(w);
            vecs.push_back(ops.times(RElem::nu().code(), w));
        }
    }
    CodewordSet out{spec.n, spec.theta, detail::z4_span(ops, vecs, limit)};
    std::sort(out.words.begin(), out.words.end());
    return out;
}

/// Sorted R-linear span (no shifts) of a set of words.
inline std::vector<Word> linear_span(const WordOps& ops, const std::vector<Word>& set, std::uint64_t limit) {
    auto words = detail::z4_span(ops, detail::linear_generators(ops, set), limit);
    std::sort(words.begin(), words.end());
    return words;
}

struct SpanVerdict {
    bool spans = false;
    bool minimal = false;
    std::optional<std::size_t> redundant_index;  ///< first element lying in the span of the others
};

/// Whether the R-linear span of `set` is the code, and whether every element is needed.
inline SpanVerdict verify_spanning_minimality(const std::vector<PolyR>& set, const CodewordSet& code) {
    const WordOps ops(code.n, code.theta);
    std::vector<Word> packed;
    for (const auto& p : set) packed.push_back(ops.pack(p));
    const std::uint64_t limit = std::max<std::uint64_t>(code.size(), 1) * 16;
    SpanVerdict v;
    v.spans = linear_span(ops, packed, limit) == code.words;
    v.minimal = true;
    for (std::size_t i = 0; i < packed.size(); ++i) {
        std::vector<Word> rest = packed;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        const auto sp = linear_span(ops, rest, limit);
        if (std::binary_search(sp.begin(), sp.end(), packed[i])) {
            v.minimal = false;
            v.redundant_index = i;
            break;
        }
    }
    return v;
}

/// Contains 0 and is closed under +, multiplication by every ring element and shift.
/// A greedy Z4 generating subset is built first; closure then reduces to checking
/// v b and z b for the generators.
inline bool closure_invariants(const CodewordSet& code) {
    if (!code.contains(0)) return false;
    const WordOps ops(code.n, code.theta);
    detail::WordSet span(ops.bits());
    std::vector<Word> span_words{0}, basis;
    span.insert(0);
    for (Word w : code.words) {
        if (span.contains(w)) continue;
        basis.push_back(w);
        const std::size_t base = span_words.size();
        Word m = 0;
        for (int c = 1; c < 4; ++c) {
            m = WordOps::add(m, w);
            for (std::size_t i = 0; i < base; ++i) {
                const Word x = WordOps::add(span_words[i], m);
                if (span.insert(x)) span_words.push_back(x);
            }
        }
        if (span_words.size() > code.size()) return false;
    }
    if (span_words.size() != code.size()) return false;
    for (Word b : basis)
        if (!code.contains(ops.times(RElem::nu().code(), b)) || !code.contains(ops.shift(b))) return false;
    return true;
}

namespace detail {

inline int deg64(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }
inline std::uint64_t mod64(std::uint64_t a, std::uint64_t b) {
    const int db = deg64(b);
    while (a != 0 && deg64(a) >= db) a ^= b << (deg64(a) - db);
    return a;
}
inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t r = mod64(a, b);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace detail

/**
 * The four towers read off the enumerated words: with x = c + k d,
 *   C1 = {c mod 2}, C2 = {c/2 : c even}, C3 = {d mod 2 : c = 0}, C4 = {d/2 : c = 0, d even}.
 */
inline Towers brute_force_towers(const CodewordSet& code) {
    const int n = code.n;
    const std::uint64_t xn = (std::uint64_t{1} << n) | 1u;
    std::array<std::uint64_t, 4> g = {xn, xn, xn, xn};
    for (Word w : code.words) {
        std::array<std::uint64_t, 4> planes = {0, 0, 0, 0};
        bool c_even = true, c_zero = true, d_even = true;
        for (int i = 0; i < n; ++i) {
            const auto [c, d] = code.theta.split(RElem::from_code(static_cast<unsigned>((w >> (4 * i)) & 15u)));
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (c.value() & 1) planes[0] |= bit;
            if (c.value() & 2) planes[1] |= bit;
            if (d.value() & 1) planes[2] |= bit;
            if (d.value() & 2) planes[3] |= bit;
            c_even = c_even && !c.is_unit();
            d_even = d_even && !d.is_unit();
            c_zero = c_zero && c.is_zero();
        }
        g[0] = detail::gcd64(g[0], planes[0]);
        if (c_even) g[1] = detail::gcd64(g[1], planes[1]);
        if (c_zero) {
            g[2] = detail::gcd64(g[2], planes[2]);
            if (d_even) g[3] = detail::gcd64(g[3], planes[3]);
        }
    }
    auto to_bin = [](std::uint64_t p) {
        BinPoly b;
        for (int i = 0; i < 64; ++i)
            if ((p >> i) & 1u) b.set(i);
        return b;
    };
    return {to_bin(g[0]), to_bin(g[1]), to_bin(g[2]), to_bin(g[3])};
}

}  // namespace z4nu
