#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dehn/groups.hpp"

namespace dehn {

/// Exact n! .
mpz_class factorial(unsigned long n);

/// Stable homotopy of the infinite orthogonal group, period 8 in the degree:
/// Z/2, Z/2, 0, Z, 0, 0, 0, Z for degrees 0..7 mod 8.
AbelianGroupDescriptor pi_o(unsigned long i);

/// pi_i(O/U) = pi_{i+1}(O) via O/U ~ loops^2(Z x BO); degree i >= 1.
/// At i = n+1 with n even this is Z/2 iff n = 6 mod 8 and 0 otherwise.
AbelianGroupDescriptor pi_o_mod_u(unsigned long i);

/// Order of pi_{2n+1}(O(2n)/U(n)) from the unstable tables:
/// 2 * n! for n = 0 mod 4, n! for n = 2 mod 4 (n even).
mpz_class harris_order(int n);

/// Upper bound for |pi_1(AC_c(T*S^n))| from the fibre-sequence exactness
/// argument: divides 2 * n! (n even).
mpz_class ac_pi1_bound(int n);

/// Almost-contact structures on S^(2n+1) are classified by a residue mod d,
/// d = n! for n = 0 mod 4 and n!/2 for n = 2 mod 4.
struct ContactClass {
    mpz_class residue;  // 0 <= residue < modulus
    mpz_class modulus;
};

mpz_class contact_modulus(int n);

/// Almost-contact class of the open book of the k-th twist power on
/// S^(2n+1): (k-1)/2 mod d. Defined only for k = +/-1 mod 8 (the boundary
/// is a topological sphere there); other k are rejected rather than
/// extrapolated.
ContactClass ustilovsky_class(long k, int n);

/// Order of the twist in the almost-complex mapping class group:
/// Bounded(n!/4, 16 * n!) for even n >= 4. For n = 2 the lower bound
/// degenerates below 1 and the smooth order 2 is substituted:
/// Bounded(2, 32).
OrderResult ac_order_bounds(int n);

/// All divisors of 2^extra_pow2 * n!, via Legendre's formula for the prime
/// exponents of the factorial. Sorted ascending.
std::vector<mpz_class> divisors_of_scaled_factorial(unsigned long n, unsigned extra_pow2);

/// Candidate almost-complex orders surviving the residue obstruction, for
/// n in {4, 6, 8}.
///
/// A candidate m must be an even divisor of 16 * n! (even: the smooth order
/// 2 divides it). Writing j0 = 8 / gcd(m, 8) for the least j with
/// j * m = 0 mod 8, the twist equals its (1 + j0 * m)-th power, so the
/// almost-contact residue (j0 * m)/2 must vanish mod d. Every survivor is a
/// multiple of n!/4, and the set is nonempty.
std::vector<mpz_class> ac_consistent_orders(int n);

}  // namespace dehn
