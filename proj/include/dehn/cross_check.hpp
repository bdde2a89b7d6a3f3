#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dehn {

/// Vector with exact rational coordinates, dimension 3 or 7.
class RationalVector {
public:
    explicit RationalVector(std::size_t dim);
    RationalVector(std::initializer_list<mpq_class> coords);

    std::size_t dim() const { return coords_.size(); }
    mpq_class& operator[](std::size_t i) { return coords_[i]; }
    const mpq_class& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const RationalVector& other) const = default;

    RationalVector operator+(const RationalVector& rhs) const;
    RationalVector operator-(const RationalVector& rhs) const;
    RationalVector operator-() const;
    RationalVector operator*(const mpq_class& scalar) const;

    bool is_zero() const;
    std::string to_string() const;

private:
    std::vector<mpq_class> coords_;
};

mpq_class dot(const RationalVector& u, const RationalVector& v);

/// Multiplication table for the 7-dimensional cross product: seven oriented
/// Fano lines (a, b, c), 1-based, each meaning e_a x e_b = e_c cyclically.
/// The table is the one generated by e1 e2 = e3, e1 e4 = e5, e2 e4 = e6,
/// e3 e4 = e7 under the octonion (Cayley-Dickson) product.
struct FanoTable {
    // sign[i][j] in {-1, 0, +1}, index[i][j] in 0..6 (0-based), for
    // e_i x e_j = sign * e_index.
    std::array<std::array<int, 7>, 7> sign{};
    std::array<std::array<int, 7>, 7> index{};

    static FanoTable from_lines(const std::array<std::array<int, 3>, 7>& lines);
    static const FanoTable& standard();
    static const std::array<std::array<int, 3>, 7>& standard_lines();
};

/// Cross product: the determinant formula in dimension 3, the Fano table in
/// dimension 7.
RationalVector cross(const RationalVector& u, const RationalVector& v);
RationalVector cross(const RationalVector& u, const RationalVector& v, const FanoTable& table);

/// Float counterparts, for the rotation check.
std::vector<double> cross(const std::vector<double>& u, const std::vector<double>& v);
double dot(const std::vector<double>& u, const std::vector<double>& v);

/// Result of the exact identity suite.
struct CrossCheckReport {
    std::size_t dim = 0;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
};

/// Checks, on deterministic pseudorandom rational vectors, exactly:
/// bilinearity in both slots, antisymmetry, u.(u x v) = 0, v.(u x v) = 0,
/// and |u x v|^2 = |u|^2 |v|^2 - (u.v)^2. All comparisons are exact.
CrossCheckReport verify_cross_identities(std::size_t dim, std::size_t sample_count,
                                         std::uint64_t seed);
CrossCheckReport verify_cross_identities(std::size_t dim, std::size_t sample_count,
                                         std::uint64_t seed, const FanoTable& table);

/// Rotates the plane spanned by (u x v, v) by theta, extended by the
/// identity on the orthogonal complement, and reports whether u is fixed to
/// within 1e-9. Requires |u| = 1 and u.v = 0 (tolerance 1e-12) and v != 0;
/// since u is orthogonal to both u x v and v, this is true for every valid
/// input.
bool rotation_fixes_orthogonal(const std::vector<double>& u, const std::vector<double>& v,
                               double theta);

/// Runs rotation_fixes_orthogonal on deterministic pseudorandom valid inputs
/// (unit u, nonzero v orthogonalised against u, theta in [0, 2pi)); returns
/// how many samples were fixed. Equals `samples` for a correct build.
std::size_t rotation_sample_pass_count(std::size_t dim, std::size_t samples,
                                       std::uint64_t seed);

}  // namespace dehn
