#include "dehn/intmat.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dehn {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("IntMatrix: ragged initializer");
        }
        for (long v : row) {
            entries_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

mpz_class& IntMatrix::operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
}

const mpz_class& IntMatrix::operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    }
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    }
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] + rhs.entries_[i];
    }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    }
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] - rhs.entries_[i];
    }
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = -entries_[i];
    }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (e != 0) return false;
    }
    return true;
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

mpz_class IntMatrix::det() const {
    if (!is_square()) {
        throw std::invalid_argument("det: matrix is not square");
    }
    const std::size_t n = rows_;
    if (n == 0) return 1;

    IntMatrix b = *this;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b(k, k) == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (b(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == k) return 0;
            b.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact division: Bareiss guarantees divisibility by the
                // previous pivot.
                b(i, j) = (b(i, j) * b(k, k) - b(i, k) * b(k, j)) / prev;
            }
            b(i, k) = 0;
        }
        prev = b(k, k);
    }
    return sign * b(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < rows_);
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap((*this)(i, c), (*this)(j, c));
    }
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    assert(i < cols_ && j < cols_);
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        std::swap((*this)(r, i), (*this)(r, j));
    }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
    assert(dst < rows_ && src < rows_ && dst != src);
    for (std::size_t c = 0; c < cols_; ++c) {
        (*this)(dst, c) += factor * (*this)(src, c);
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
    assert(dst < cols_ && src < cols_ && dst != src);
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, dst) += factor * (*this)(r, src);
    }
}

void IntMatrix::negate_row(std::size_t i) {
    assert(i < rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        (*this)(i, c) = -(*this)(i, c);
    }
}

void IntMatrix::negate_col(std::size_t j) {
    assert(j < cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, j) = -(*this)(r, j);
    }
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i > 0) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) os << ',';
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix matrix_pow(const IntMatrix& m, unsigned long k) {
    if (!m.is_square()) {
        throw std::invalid_argument("matrix_pow: matrix is not square");
    }
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        base = base * base;
        k >>= 1UL;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    return os << m.to_string();
}

}  // namespace dehn
