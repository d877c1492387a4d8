#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "intmat.hpp"

namespace orthotopy {

// Smith normal form u * m * v = d. u and v are unimodular (|det| = 1), d is
// diagonal and non-negative, every diagonal entry divides the next, and zero
// entries trail the nonzero ones.
struct SnfResult {
    IntMat u, d, v;
};

inline SnfResult smith_normal_form(const IntMat& input) {
    IntMat m = input;
    const std::size_t R = m.rows();
    const std::size_t C = m.cols();
    IntMat u = IntMat::identity(R);
    IntMat v = IntMat::identity(C);
    const std::size_t steps = std::min(R, C);

    for (std::size_t t = 0; t < steps; ++t) {
        bool submatrix_zero = false;
        for (;;) {
            // Pivot: nonzero entry of least absolute value in m[t.., t..].
            std::size_t pr = R, pc = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (m(i, j) != 0 && (pr == R || abs(m(i, j)) < abs(m(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == R) {
                submatrix_zero = true;
                break;
            }
            m.swap_rows(t, pr);
            u.swap_rows(t, pr);
            m.swap_cols(t, pc);
            v.swap_cols(t, pc);

            // Clear column and row t; leftover remainders force a re-pivot
            // with a strictly smaller pivot, so this terminates.
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m(i, t) == 0) continue;
                const Int q = m(i, t) / m(t, t);
                if (q != 0) {
                    m.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                if (m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m(t, j) == 0) continue;
                const Int q = m(t, j) / m(t, t);
                if (q != 0) {
                    m.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility chain: the pivot must divide the remaining block.
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C && divides; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        m.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (submatrix_zero) break;
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (m(t, t) < 0) {
            m.negate_row(t);
            u.negate_row(t);
        }
    return {u, m, v};
}

// Number of nonzero diagonal entries of the Smith form, i.e. the rank over Q.
inline std::size_t snf_rank(const SnfResult& s) {
    const std::size_t steps = std::min(s.d.rows(), s.d.cols());
    std::size_t r = 0;
    while (r < steps && s.d(r, r) != 0) ++r;
    return r;
}

inline std::size_t rank(const IntMat& m) { return snf_rank(smith_normal_form(m)); }

// Basis of the integer kernel {x : m x = 0}, one column per basis vector.
inline IntMat kernel_basis(const IntMat& m) {
    const SnfResult s = smith_normal_form(m);
    const std::size_t r = snf_rank(s);
    const std::size_t C = m.cols();
    IntMat out(C, C - r);
    for (std::size_t j = r; j < C; ++j)
        for (std::size_t i = 0; i < C; ++i) out(i, j - r) = s.v(i, j);
    return out;
}

} // namespace orthotopy
