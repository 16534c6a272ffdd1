#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "aginv/numeric.hpp"

namespace aginv {

// Dense matrix of arbitrary-precision integers, row-major. Any dimensions
// are allowed, including zero rows or columns.
class IntegerMatrix {
public:
    IntegerMatrix() = default;

    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    // Row-of-rows literal, for tests and small fixtures.
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix diagonal(std::size_t rows, std::size_t cols, const std::vector<Int>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;

    bool is_zero() const;
    bool is_diagonal() const;

    // Exact determinant by fraction-free (Bareiss) elimination. Square only.
    Int determinant() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

// Column concatenation [a | b]; row counts must match.
IntegerMatrix hcat(const IntegerMatrix& a, const IntegerMatrix& b);
// Row stacking [a ; b]; column counts must match.
IntegerMatrix vcat(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace aginv
