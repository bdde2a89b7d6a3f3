#pragma once

#include <gmpxx.h>

#include <vector>

#include "dehn/groups.hpp"
#include "dehn/intmat.hpp"
#include "dehn/snf.hpp"

namespace dehn {

/// Action of a compactly supported automorphism of T*S^n on the relative
/// middle homology H_n(D*S^n, B; Z), written in the basis {[S^n], [D]},
/// where D is a cotangent fibre and B its boundary sphere.
///
/// Every such action fixes [B], so its matrix is [[epsilon, a], [0, 1]]:
/// epsilon is the sign on [S^n] (the variation image) and a is the [S^n]
/// coefficient of the image of [D].
///
/// Orientation conventions are fixed, not configurable:
///   <[D], [S^n]> = 1 and <[S^n], [S^n]> = 2 * (-1)^(n/2) for even n.
struct RelativeTwistAction {
    int n = 0;           // sphere dimension, >= 1
    int epsilon = 1;     // +1 or -1
    mpz_class a;         // coefficient of [S^n] in the image of [D]
    IntMatrix matrix;    // [[epsilon, a], [0, 1]]

    bool is_identity() const { return epsilon == 1 && a == 0; }
    bool operator==(const RelativeTwistAction& other) const {
        return n == other.n && epsilon == other.epsilon && a == other.a;
    }
};

/// Builds the action with the given sign data (validates epsilon).
RelativeTwistAction make_action(int n, int epsilon, const mpz_class& a);

/// The twist's action: epsilon = (-1)^(n+1), a = (-1)^((n+1)(n+2)/2).
RelativeTwistAction twist_matrix(int n);

/// Self-intersection <[S^n], [S^n]> = 2 * (-1)^(n/2); n must be even.
mpz_class sphere_self_intersection(int n);

/// Order of the twist's homology action: certified Infinite for odd n,
/// Finite(2) for even n.
OrderResult homological_order(int n);

/// Whether (epsilon, a) preserves <[D], [S^n]> = 1 for even n, i.e.
/// (2 * (-1)^(n/2) * a + 1) * epsilon = 1.
bool pairing_constraint(int epsilon, const mpz_class& a, int n);

/// Brute force over epsilon in {+1, -1} and |a| <= a_range: all actions
/// compatible with the intersection pairing. For every even n this is
/// exactly {identity, [[-1, (-1)^(n/2+1)], [0, 1]]}, independent of the
/// range; solutions always have |a| <= 1, so any a_range >= 1 suffices.
std::vector<RelativeTwistAction> enumerate_homology_actions(int n, long a_range = 16);

}  // namespace dehn
