#include "dehn/twist_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehn {

namespace {

void require_sphere_dim(int n) {
    if (n < 1) {
        throw std::invalid_argument("sphere dimension must be >= 1");
    }
}

void require_even(int n) {
    if (n % 2 != 0) {
        throw std::invalid_argument("sphere dimension must be even here");
    }
}

}  // namespace

RelativeTwistAction make_action(int n, int epsilon, const mpz_class& a) {
    require_sphere_dim(n);
    if (epsilon != 1 && epsilon != -1) {
        throw std::invalid_argument("epsilon must be +1 or -1");
    }
    RelativeTwistAction act;
    act.n = n;
    act.epsilon = epsilon;
    act.a = a;
    act.matrix = IntMatrix(2, 2);
    act.matrix(0, 0) = epsilon;
    act.matrix(0, 1) = a;
    act.matrix(1, 0) = 0;
    act.matrix(1, 1) = 1;
    return act;
}

RelativeTwistAction twist_matrix(int n) {
    require_sphere_dim(n);
    const int epsilon = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
    // (-1)^((n+1)(n+2)/2): the exponent's parity only depends on n mod 4.
    const long long exponent = (static_cast<long long>(n) + 1) * (n + 2) / 2;
    const int a = (exponent % 2 == 0) ? 1 : -1;
    return make_action(n, epsilon, a);
}

mpz_class sphere_self_intersection(int n) {
    require_sphere_dim(n);
    require_even(n);
    return ((n / 2) % 2 == 0) ? mpz_class(2) : mpz_class(-2);
}

OrderResult homological_order(int n) {
    require_sphere_dim(n);
    // Odd n: [[1, +/-1], [0, 1]] fires the unipotent certificate.
    // Even n: [[-1, a], [0, 1]] squares to the identity.
    return matrix_order(twist_matrix(n).matrix, 4);
}

bool pairing_constraint(int epsilon, const mpz_class& a, int n) {
    require_sphere_dim(n);
    require_even(n);
    if (epsilon != 1 && epsilon != -1) {
        throw std::invalid_argument("epsilon must be +1 or -1");
    }
    return (sphere_self_intersection(n) * a + 1) * epsilon == 1;
}

std::vector<RelativeTwistAction> enumerate_homology_actions(int n, long a_range) {
    require_sphere_dim(n);
    require_even(n);
    if (a_range < 1) {
        throw std::invalid_argument("a_range must be >= 1");
    }
    std::vector<RelativeTwistAction> out;
    for (int epsilon : {+1, -1}) {
        for (long a = -a_range; a <= a_range; ++a) {
            if (pairing_constraint(epsilon, mpz_class(a), n)) {
                out.push_back(make_action(n, epsilon, mpz_class(a)));
            }
        }
    }
    // Identity first, then by (epsilon, a); determinism for callers and tests.
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.is_identity() != y.is_identity()) return x.is_identity();
        if (x.epsilon != y.epsilon) return x.epsilon > y.epsilon;
        return x.a < y.a;
    });
    return out;
}

}  // namespace dehn
