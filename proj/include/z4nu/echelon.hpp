#pragma once

/**
 * @file echelon.hpp
 * @brief Howell normal form of submodules of Z4^m.
 *
 * Rows are stored by pivot column. A pivot is 1 or 2; entries above a unit
 * pivot are 0 and entries above a pivot 2 are in {0, 1}. The form has the
 * Howell property: the rows with pivot >= c span every module element whose
 * first c entries vanish. That makes reduction a membership test and makes
 * the basis depend only on the module.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "z4nu/binpoly.hpp"
#include "z4nu/error.hpp"
#include "z4nu/ring.hpp"

namespace z4nu {

using Z4Vec = std::vector<Z4>;

class Z4Module {
public:
    explicit Z4Module(int width) : width_(width), rows_(static_cast<std::size_t>(width)) {
        if (width < 0) throw Error("module width must be nonnegative");
    }

    /// Howell form of the span of `gens`.
    static Z4Module span(int width, const std::vector<Z4Vec>& gens) {
        Z4Module m(width);
        for (const auto& g : gens) m.insert(g);
        m.normalize();
        return m;
    }

    int width() const { return width_; }

    /// Adds a generator. The form is only canonical again after normalize().
    void insert(Z4Vec v) {
        check_width(v);
        std::vector<Z4Vec> pool{std::move(v)};
        while (!pool.empty()) {
            Z4Vec x = std::move(pool.back());
            pool.pop_back();
            for (int c = lead(x, 0); c < width_; c = lead(x, c)) {
                auto& slot = rows_[static_cast<std::size_t>(c)];
                if (!slot) {
                    if (x[idx(c)].is_unit()) scale(x, x[idx(c)]);  // 3 * 3 = 1
                    else pool.push_back(times2(x));
                    slot = std::move(x);
                    break;
                }
                Z4Vec& r = *slot;
                if (r[idx(c)] == Z4(1)) {
                    axpy(x, -x[idx(c)], r);
                } else if (!x[idx(c)].is_unit()) {
                    axpy(x, Z4(3), r);
                } else {
                    // A unit pivot displaces the pivot-2 row; r - 2x keeps its information.
                    scale(x, x[idx(c)]);
                    Z4Vec rest = r;
                    axpy(rest, Z4(2), x);
                    pool.push_back(std::move(rest));
                    r = std::move(x);
                    break;
                }
            }
        }
    }

    /// Back-substitution, left to right, to the canonical reduced form.
    void normalize() {
        for (int c = 0; c < width_; ++c) {
            const auto& piv = rows_[idx(c)];
            if (!piv) continue;
            for (int above = 0; above < c; ++above) {
                auto& r = rows_[idx(above)];
                if (r) reduce_entry(*r, c, *piv);
            }
        }
    }

    /// Canonical representative of v + M; zero iff v is in M.
    /// With `upto` < width, only pivots in columns [0, upto) are used.
    Z4Vec reduce(Z4Vec v, int upto = -1) const {
        check_width(v);
        const int stop = upto < 0 ? width_ : upto;
        for (int c = 0; c < stop; ++c) {
            const auto& piv = rows_[idx(c)];
            if (piv && !v[idx(c)].is_zero()) reduce_entry(v, c, *piv);
        }
        return v;
    }

    bool contains(const Z4Vec& v) const {
        const Z4Vec r = reduce(v);
        for (Z4 x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    /// log2 |M|: each unit pivot contributes 2 bits, each pivot 2 one bit.
    int log2_size() const {
        int bits = 0;
        for (const auto& r : rows_)
            if (r) bits += pivot_of(*r) == Z4(1) ? 2 : 1;
        return bits;
    }

    /// Rows in pivot order.
    std::vector<Z4Vec> rows() const { return rows_from(0); }

    /// Rows with pivot >= col; they span the elements vanishing on [0, col).
    std::vector<Z4Vec> rows_from(int col) const {
        std::vector<Z4Vec> out;
        for (int c = col; c < width_; ++c)
            if (rows_[idx(c)]) out.push_back(*rows_[idx(c)]);
        return out;
    }

    /// Pivot column and pivot value of each row, in order.
    std::vector<std::pair<int, Z4>> pivots() const {
        std::vector<std::pair<int, Z4>> out;
        for (int c = 0; c < width_; ++c)
            if (rows_[idx(c)]) out.emplace_back(c, (*rows_[idx(c)])[idx(c)]);
        return out;
    }

    friend bool operator==(const Z4Module&, const Z4Module&) = default;

private:
    static std::size_t idx(int c) { return static_cast<std::size_t>(c); }

    void check_width(const Z4Vec& v) const {
        if (v.size() != idx(width_))
            throw MismatchError("vector of width " + std::to_string(v.size()) + " for a module of width " +
                                std::to_string(width_));
    }

    int lead(const Z4Vec& v, int from) const {
        for (int c = from; c < width_; ++c)
            if (!v[idx(c)].is_zero()) return c;
        return width_;
    }

    Z4 pivot_of(const Z4Vec& r) const { return r[idx(lead(r, 0))]; }

    static void scale(Z4Vec& v, Z4 s) {
        for (auto& x : v) x = x * s;
    }
    static Z4Vec times2(Z4Vec v) {
        scale(v, Z4(2));
        return v;
    }
    /// v += s * r
    static void axpy(Z4Vec& v, Z4 s, const Z4Vec& r) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += s * r[i];
    }
    /// Brings v[c] into {0} (unit pivot) or {0, 1} (pivot 2) using the pivot row.
    static void reduce_entry(Z4Vec& v, int c, const Z4Vec& piv) {
        const Z4 e = v[idx(c)];
        if (piv[idx(c)] == Z4(1)) axpy(v, -e, piv);
        else if (e.value() >= 2) axpy(v, Z4(3), piv);
    }

    int width_;
    std::vector<std::optional<Z4Vec>> rows_;
};

/**
 * Solves sum_i x_i rows[i] = target over Z2 by elimination. Returns the
 * coefficient vector, or nothing when target is outside the row space.
 */
inline std::optional<std::vector<std::uint8_t>> z2_solve(const std::vector<std::vector<std::uint8_t>>& rows,
                                                         const std::vector<std::uint8_t>& target) {
    const std::size_t k = rows.size();
    const std::size_t m = target.size();
    // Each working row carries its combination of inputs.
    struct Work {
        std::vector<std::uint8_t> v, comb;
    };
    std::vector<Work> basis;
    std::vector<std::size_t> pivot_col;
    for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != m) throw MismatchError("z2_solve: row width mismatch");
        Work w{rows[i], std::vector<std::uint8_t>(k, 0)};
        w.comb[i] = 1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (!w.v[pivot_col[b]]) continue;
            for (std::size_t j = 0; j < m; ++j) w.v[j] ^= basis[b].v[j];
            for (std::size_t j = 0; j < k; ++j) w.comb[j] ^= basis[b].comb[j];
        }
        std::size_t c = 0;
        while (c < m && !w.v[c]) ++c;
        if (c == m) continue;
        pivot_col.push_back(c);
        basis.push_back(std::move(w));
    }
    std::vector<std::uint8_t> t = target, x(k, 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (!t[pivot_col[b]]) continue;
        for (std::size_t j = 0; j < m; ++j) t[j] ^= basis[b].v[j];
        for (std::size_t j = 0; j < k; ++j) x[j] ^= basis[b].comb[j];
    }
    for (auto bit : t)
        if (bit) return std::nullopt;
    return x;
}

}  // namespace z4nu
