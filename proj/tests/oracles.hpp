#pragma once

// Test-only oracles and generators. Everything here is deliberately
// independent of the elimination-based routines it is used to check.

#include <numeric>
#include <random>
#include <vector>

#include "dehn/intmat.hpp"

namespace dehn::testing {

inline IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            s(i, j) = m(rows[i], cols[j]);
        }
    }
    return s;
}

// Advances a strictly increasing index combination; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Determinant-divisor route to the invariant factors: d_k = gcd of all
// k x k minors, and the k-th diagonal entry is d_k / d_(k-1). This touches
// none of the elimination code, so it can vouch for snf().
inline std::vector<mpz_class> snf_diagonal_by_minor_gcds(const IntMatrix& m) {
    const std::size_t steps = std::min(m.rows(), m.cols());
    std::vector<mpz_class> diag(steps, 0);
    mpz_class prev = 1;
    for (std::size_t k = 1; k <= steps; ++k) {
        mpz_class g = 0;
        std::vector<std::size_t> rows(k), cols(k);
        std::iota(rows.begin(), rows.end(), 0);
        do {
            std::iota(cols.begin(), cols.end(), 0);
            do {
                mpz_class d = submatrix(m, rows, cols).det();
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
        if (g == 0) break;  // rank reached; remaining factors stay 0
        diag[k - 1] = g / prev;
        prev = g;
    }
    return diag;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long entry_range) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-entry_range, entry_range);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(i, j) = entry(rng);
        }
    }
    return m;
}

// Product of random elementary operations applied to the identity.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long> factor(-3, 3);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = row(rng), j = row(rng);
        switch (kind(rng)) {
            case 0:
                if (i != j) u.add_row_multiple(i, j, mpz_class(factor(rng)));
                break;
            case 1:
                u.swap_rows(i, j);
                break;
            default:
                u.negate_row(i);
                break;
        }
    }
    return u;
}

}  // namespace dehn::testing
