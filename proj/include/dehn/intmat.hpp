#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace dehn {

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// All arithmetic is exact; there is deliberately no fixed-width path, since
/// downstream order computations involve factorial-sized values.
class IntMatrix {
public:
    IntMatrix() = default;

    /// rows x cols zero matrix.
    IntMatrix(std::size_t rows, std::size_t cols);

    /// Construct from row literals: IntMatrix{{0, 1}, {-1, 0}}.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j);
    const mpz_class& operator()(std::size_t i, std::size_t j) const;

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    bool is_zero() const;
    bool is_identity() const;

    /// Exact determinant via Bareiss fraction-free elimination. Square only.
    mpz_class det() const;

    // Elementary row/column operations (used by the normal-form routines).
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    /// Compact rendering, e.g. "[[0,1],[-1,0]]".
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

/// Exact k-th power of a square matrix; k = 0 yields the identity.
IntMatrix matrix_pow(const IntMatrix& m, unsigned long k);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace dehn
