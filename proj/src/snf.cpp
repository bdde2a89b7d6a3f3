#include "dehn/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace dehn {

namespace {

// Position of a nonzero entry of minimal absolute value in the submatrix
// d[t.., t..], if any.
std::optional<std::pair<std::size_t, std::size_t>> min_nonzero(const IntMatrix& d,
                                                               std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs;
    for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            mpz_class a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    }
    return best;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SnfResult r{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& u = r.u;
    IntMatrix& d = r.d;
    IntMatrix& v = r.v;

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        auto pivot = min_nonzero(d, t);
        if (!pivot) break;  // remaining submatrix is zero

        while (pivot) {
            const auto [pi, pj] = *pivot;
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Reduce column t below and row t to the right of the pivot.
            bool remainder_left = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                mpz_class q = d(i, t) / d(t, t);  // truncated
                if (q != 0) {
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (d(i, t) != 0) remainder_left = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                mpz_class q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (d(t, j) != 0) remainder_left = true;
            }
            if (remainder_left) {
                // A remainder strictly smaller than the pivot survives;
                // re-pivot on it.
                pivot = min_nonzero(d, t);
                continue;
            }

            // Pivot is lone in its row and column. Enforce that it divides
            // every entry of the remaining submatrix, so the diagonal comes
            // out in a divisibility chain.
            bool fixed_up = false;
            for (std::size_t i = t + 1; i < rows && !fixed_up; ++i) {
                for (std::size_t j = t + 1; j < cols && !fixed_up; ++j) {
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed_up = true;
                    }
                }
            }
            if (fixed_up) {
                pivot = min_nonzero(d, t);
                continue;
            }
            break;
        }

        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return r;
}

CokernelKernel coker_ker(const IntMatrix& m) {
    const SnfResult s = snf(m);
    const std::size_t steps = std::min(m.rows(), m.cols());

    std::size_t rank = 0;
    std::vector<mpz_class> torsion;
    for (std::size_t t = 0; t < steps; ++t) {
        if (s.d(t, t) == 0) break;
        ++rank;
        if (s.d(t, t) >= 2) torsion.push_back(s.d(t, t));
    }

    CokernelKernel out;
    out.cokernel = AbelianGroupDescriptor(m.rows() - rank, std::move(torsion));
    out.kernel_rank = m.cols() - rank;
    return out;
}

OrderResult matrix_order(const IntMatrix& m, unsigned long search_bound) {
    if (!m.is_square()) {
        throw std::invalid_argument("matrix_order: matrix is not square");
    }
    if (search_bound == 0) {
        throw std::invalid_argument("matrix_order: search bound must be positive");
    }
    mpz_class determinant = m.det();
    if (determinant != 1 && determinant != -1) {
        throw std::invalid_argument("matrix_order: determinant is not +/-1");
    }

    // Unipotent certificate, checked before any search: if n = m - 1 is
    // nonzero with n^2 = 0 then m^k = 1 + k n is never the identity.
    const IntMatrix n = m - IntMatrix::identity(m.rows());
    if (!n.is_zero() && (n * n).is_zero()) {
        return OrderResult::infinite();
    }

    IntMatrix power = m;
    for (unsigned long k = 1; k <= search_bound; ++k) {
        if (power.is_identity()) {
            return OrderResult::finite(mpz_class(k));
        }
        power = power * m;
    }
    throw order_search_exceeded("matrix_order: order exceeds search bound");
}

}  // namespace dehn
