#include "aginv/integer_matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace aginv {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntegerMatrix: entry count does not match rows * cols");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("IntegerMatrix: ragged initializer");
        for (long e : row) entries_.emplace_back(e);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::size_t rows, std::size_t cols,
                                      const std::vector<Int>& diag) {
    IntegerMatrix m(rows, cols);
    std::size_t t = std::min(rows, cols);
    if (diag.size() > t)
        throw std::invalid_argument("IntegerMatrix::diagonal: too many diagonal entries");
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntegerMatrix: dimension mismatch in product");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

bool IntegerMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

Int IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;

    IntegerMatrix a(*this);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // Bareiss: this division is exact.
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j);
        }
        os << "]";
        if (i + 1 < m.rows()) os << "\n";
    }
    return os << "]";
}

IntegerMatrix hcat(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row counts differ");
    IntegerMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

IntegerMatrix vcat(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column counts differ");
    IntegerMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

}  // namespace aginv
