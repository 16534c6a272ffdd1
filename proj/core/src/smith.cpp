#include "aginv/smith.hpp"

#include <algorithm>
#include <utility>

namespace aginv {

std::vector<Int> SmithResult::diagonal() const {
    std::size_t t = std::min(d.rows(), d.cols());
    std::vector<Int> out;
    out.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.push_back(d(i, i));
    return out;
}

namespace {

// Row and column operations applied to the work matrix are mirrored on the
// accumulated unimodular factors, keeping u * m_input * v == a throughout.
struct Reduction {
    IntegerMatrix a, u, v;

    explicit Reduction(const IntegerMatrix& m)
        : a(m), u(IntegerMatrix::identity(m.rows())), v(IntegerMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }

    // row dst += f * row src
    void add_row(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += f * a(src, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += f * u(src, c);
    }

    // col dst += f * col src
    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += f * a(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += f * v(r, src);
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t t = std::min(rows, cols);

    Reduction red(m);
    IntegerMatrix& a = red.a;

    for (std::size_t k = 0; k < t; ++k) {
        bool submatrix_zero = false;
        for (;;) {
            // Pivot rule: smallest nonzero |entry|, then lowest row, then
            // lowest column. The row-major scan realizes the tie-breaks.
            std::size_t pr = k, pc = k;
            bool found = false;
            Int best;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    Int mag = abs(a(i, j));
                    if (!found || mag < best) {
                        found = true;
                        best = std::move(mag);
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) {
                submatrix_zero = true;
                break;
            }
            red.swap_rows(k, pr);
            red.swap_cols(k, pc);

            // One elimination pass over column k, then row k. Truncated
            // division leaves remainders strictly smaller than the pivot,
            // so re-picking the pivot makes progress.
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (a(i, k) == 0) continue;
                Int q = a(i, k) / a(k, k);
                if (q != 0) red.add_row(i, k, -q);
                if (a(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (a(k, j) == 0) continue;
                Int q = a(k, j) / a(k, k);
                if (q != 0) red.add_col(j, k, -q);
                if (a(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Cross is clear; force the pivot to divide the remaining block
            // by folding the first offending row into row k.
            bool fixed = false;
            for (std::size_t i = k + 1; i < rows && !fixed; ++i)
                for (std::size_t j = k + 1; j < cols && !fixed; ++j)
                    if (a(i, j) % a(k, k) != 0) {
                        red.add_row(k, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (submatrix_zero) break;
    }

    for (std::size_t i = 0; i < t; ++i)
        if (a(i, i) < 0) red.negate_row(i);

    SmithResult result{std::move(red.u), std::move(red.a), std::move(red.v), 0};
    for (std::size_t i = 0; i < t; ++i)
        if (result.d(i, i) != 0) ++result.rank;
    return result;
}

}  // namespace aginv
