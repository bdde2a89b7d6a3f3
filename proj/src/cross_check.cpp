#include "dehn/cross_check.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dehn {

namespace {

void require_dim(std::size_t dim) {
    if (dim != 3 && dim != 7) {
        throw std::invalid_argument("cross products live in dimension 3 or 7");
    }
}

template <typename Vec>
Vec cross_impl(const Vec& u, const Vec& v, const FanoTable& table, std::size_t dim) {
    Vec out(dim);
    if (dim == 3) {
        out[0] = u[1] * v[2] - u[2] * v[1];
        out[1] = u[2] * v[0] - u[0] * v[2];
        out[2] = u[0] * v[1] - u[1] * v[0];
        return out;
    }
    for (std::size_t i = 0; i < 7; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < 7; ++j) {
            const int s = table.sign[i][j];
            if (s == 0 || v[j] == 0) continue;
            if (s > 0) {
                out[table.index[i][j]] += u[i] * v[j];
            } else {
                out[table.index[i][j]] -= u[i] * v[j];
            }
        }
    }
    return out;
}

}  // namespace

RationalVector::RationalVector(std::size_t dim) : coords_(dim) {
    require_dim(dim);
}

RationalVector::RationalVector(std::initializer_list<mpq_class> coords) : coords_(coords) {
    require_dim(coords_.size());
    for (auto& c : coords_) c.canonicalize();
}

RationalVector RationalVector::operator+(const RationalVector& rhs) const {
    if (dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch");
    RationalVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = coords_[i] + rhs.coords_[i];
    return out;
}

RationalVector RationalVector::operator-(const RationalVector& rhs) const {
    if (dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch");
    RationalVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = coords_[i] - rhs.coords_[i];
    return out;
}

RationalVector RationalVector::operator-() const {
    RationalVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = -coords_[i];
    return out;
}

RationalVector RationalVector::operator*(const mpq_class& scalar) const {
    RationalVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = coords_[i] * scalar;
    return out;
}

bool RationalVector::is_zero() const {
    for (const auto& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

std::string RationalVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i > 0) os << ',';
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

mpq_class dot(const RationalVector& u, const RationalVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    mpq_class s = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
    return s;
}

FanoTable FanoTable::from_lines(const std::array<std::array<int, 3>, 7>& lines) {
    FanoTable t;
    for (const auto& line : lines) {
        const int a = line[0] - 1;
        const int b = line[1] - 1;
        const int c = line[2] - 1;
        if (a < 0 || a > 6 || b < 0 || b > 6 || c < 0 || c > 6) {
            throw std::invalid_argument("Fano line indices must be 1..7");
        }
        // (a, b, c) cyclically, each pair antisymmetric.
        const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
        for (const auto& [x, y, z] : cyc) {
            t.sign[x][y] = 1;
            t.index[x][y] = z;
            t.sign[y][x] = -1;
            t.index[y][x] = z;
        }
    }
    return t;
}

const std::array<std::array<int, 3>, 7>& FanoTable::standard_lines() {
    static const std::array<std::array<int, 3>, 7> lines = {{
        {1, 2, 3},
        {1, 4, 5},
        {2, 4, 6},
        {3, 4, 7},
        {1, 7, 6},
        {2, 5, 7},
        {3, 6, 5},
    }};
    return lines;
}

const FanoTable& FanoTable::standard() {
    static const FanoTable t = FanoTable::from_lines(standard_lines());
    return t;
}

RationalVector cross(const RationalVector& u, const RationalVector& v) {
    return cross(u, v, FanoTable::standard());
}

RationalVector cross(const RationalVector& u, const RationalVector& v, const FanoTable& table) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    return cross_impl(u, v, table, u.dim());
}

std::vector<double> cross(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    require_dim(u.size());
    return cross_impl(u, v, FanoTable::standard(), u.size());
}

double dot(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

namespace {

mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 10);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

RationalVector random_vector(std::size_t dim, std::mt19937_64& rng) {
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = random_rational(rng);
    return v;
}

}  // namespace

CrossCheckReport verify_cross_identities(std::size_t dim, std::size_t sample_count,
                                         std::uint64_t seed) {
    return verify_cross_identities(dim, sample_count, seed, FanoTable::standard());
}

CrossCheckReport verify_cross_identities(std::size_t dim, std::size_t sample_count,
                                         std::uint64_t seed, const FanoTable& table) {
    require_dim(dim);
    if (sample_count < 1) {
        throw std::invalid_argument("sample count must be >= 1");
    }
    CrossCheckReport report;
    report.dim = dim;
    report.samples = sample_count;

    std::mt19937_64 rng(seed);
    auto record = [&](const char* what, const RationalVector& u, const RationalVector& v) {
        ++report.failures;
        if (report.first_counterexample.empty()) {
            report.first_counterexample =
                std::string(what) + " at u=" + u.to_string() + " v=" + v.to_string();
        }
    };

    for (std::size_t s = 0; s < sample_count; ++s) {
        const RationalVector u = random_vector(dim, rng);
        const RationalVector v = random_vector(dim, rng);
        const RationalVector w = random_vector(dim, rng);
        const mpq_class lambda = random_rational(rng);
        const mpq_class mu = random_rational(rng);

        const RationalVector uv = cross(u, v, table);

        if (cross(u * lambda + w * mu, v, table) != uv * lambda + cross(w, v, table) * mu) {
            record("bilinearity (first slot)", u, v);
        }
        if (cross(u, v * lambda + w * mu, table) != uv * lambda + cross(u, w, table) * mu) {
            record("bilinearity (second slot)", u, v);
        }
        if (cross(v, u, table) != -uv) {
            record("antisymmetry", u, v);
        }
        if (dot(u, uv) != 0) {
            record("u . (u x v) = 0", u, v);
        }
        if (dot(v, uv) != 0) {
            record("v . (u x v) = 0", u, v);
        }
        const mpq_class uu = dot(u, u), vv = dot(v, v), uvdot = dot(u, v);
        if (dot(uv, uv) != uu * vv - uvdot * uvdot) {
            record("|u x v|^2 = |u|^2 |v|^2 - (u.v)^2", u, v);
        }
    }
    return report;
}

std::size_t rotation_sample_pass_count(std::size_t dim, std::size_t samples,
                                       std::uint64_t seed) {
    require_dim(dim);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);

    std::size_t fixed = 0;
    std::size_t produced = 0;
    while (produced < samples) {
        std::vector<double> u(dim), v(dim);
        for (auto& x : u) x = coord(rng);
        for (auto& x : v) x = coord(rng);
        const double un = std::sqrt(dot(u, u));
        if (un < 1e-3) continue;
        for (auto& x : u) x /= un;
        // Orthogonalise v against u; skip near-degenerate draws.
        const double uv = dot(u, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= uv * u[i];
        // One more projection pass tightens u.v below the 1e-12 gate.
        const double uv2 = dot(u, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= uv2 * u[i];
        if (std::sqrt(dot(v, v)) < 1e-3) continue;
        ++produced;
        if (rotation_fixes_orthogonal(u, v, angle(rng))) ++fixed;
    }
    return fixed;
}

bool rotation_fixes_orthogonal(const std::vector<double>& u, const std::vector<double>& v,
                               double theta) {
    constexpr double kInputTol = 1e-12;
    constexpr double kFixTol = 1e-9;
    if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    require_dim(u.size());

    const double unorm = std::sqrt(dot(u, u));
    const double vnorm = std::sqrt(dot(v, v));
    if (std::abs(unorm - 1.0) > kInputTol) {
        throw std::invalid_argument("rotation_fixes_orthogonal: |u| must be 1");
    }
    if (vnorm <= kInputTol) {
        throw std::invalid_argument("rotation_fixes_orthogonal: v must be nonzero");
    }
    if (std::abs(dot(u, v)) > kInputTol) {
        throw std::invalid_argument("rotation_fixes_orthogonal: u . v must vanish");
    }

    // Orthonormal frame (a, b) of the plane, oriented so (u x v, v) is
    // positive: a along u x v, b along v (they are orthogonal already).
    const std::vector<double> w = cross(u, v);
    const double wnorm = std::sqrt(dot(w, w));
    if (wnorm <= kInputTol) {
        throw std::invalid_argument("rotation_fixes_orthogonal: u x v degenerated");
    }
    const std::size_t n = u.size();
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = w[i] / wnorm;
        b[i] = v[i] / vnorm;
    }

    const double ua = dot(u, a);
    const double ub = dot(u, b);
    const double c = std::cos(theta), s = std::sin(theta);
    // R(x) = x + (cos-1)((x.a)a + (x.b)b) + sin((x.a)b - (x.b)a)
    double drift2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ri = u[i] + (c - 1.0) * (ua * a[i] + ub * b[i]) + s * (ua * b[i] - ub * a[i]);
        const double d = ri - u[i];
        drift2 += d * d;
    }
    return std::sqrt(drift2) <= kFixTol;
}

}  // namespace dehn
