#include "dehn/bott_ac.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dehn {

namespace {

void require_even(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("n must be even and >= 2");
    }
}

}  // namespace

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

AbelianGroupDescriptor pi_o(unsigned long i) {
    switch (i % 8) {
        case 0:
        case 1:
            return AbelianGroupDescriptor::cyclic(2);
        case 3:
        case 7:
            return AbelianGroupDescriptor::free_abelian(1);
        default:
            return AbelianGroupDescriptor::trivial();
    }
}

AbelianGroupDescriptor pi_o_mod_u(unsigned long i) {
    if (i < 1) {
        throw std::invalid_argument("pi_o_mod_u: degree must be >= 1");
    }
    return pi_o(i + 1);
}

mpz_class harris_order(int n) {
    require_even(n);
    const mpz_class f = factorial(static_cast<unsigned long>(n));
    return (n % 4 == 0) ? mpz_class(2 * f) : f;
}

mpz_class ac_pi1_bound(int n) {
    require_even(n);
    return 2 * factorial(static_cast<unsigned long>(n));
}

mpz_class contact_modulus(int n) {
    require_even(n);
    const mpz_class f = factorial(static_cast<unsigned long>(n));
    return (n % 4 == 0) ? f : mpz_class(f / 2);
}

ContactClass ustilovsky_class(long k, int n) {
    require_even(n);
    if (k < 1) {
        throw std::invalid_argument("ustilovsky_class: k must be >= 1");
    }
    if (k % 8 != 1 && k % 8 != 7) {
        throw std::invalid_argument(
            "ustilovsky_class: only defined for k = +/-1 mod 8 (boundary a sphere)");
    }
    ContactClass c;
    c.modulus = contact_modulus(n);
    c.residue = mpz_class((k - 1) / 2) % c.modulus;
    return c;
}

OrderResult ac_order_bounds(int n) {
    require_even(n);
    const mpz_class f = factorial(static_cast<unsigned long>(n));
    if (n == 2) {
        // n!/4 < 1 here; the smooth order 2 stands in as the lower bound.
        return OrderResult::bounded(2, 16 * f);
    }
    return OrderResult::bounded(f / 4, 16 * f);
}

std::vector<mpz_class> divisors_of_scaled_factorial(unsigned long n, unsigned extra_pow2) {
    // Prime exponents of n! by Legendre's formula.
    std::vector<std::pair<unsigned long, unsigned long>> factors;
    for (unsigned long p = 2; p <= n; ++p) {
        bool prime = true;
        for (unsigned long q = 2; q * q <= p; ++q) {
            if (p % q == 0) {
                prime = false;
                break;
            }
        }
        if (!prime) continue;
        unsigned long e = 0;
        for (unsigned long pk = p; pk <= n; pk *= p) {
            e += n / pk;
            if (pk > n / p) break;  // avoid overflow on pk *= p
        }
        factors.emplace_back(p, e);
    }
    if (extra_pow2 > 0) {
        if (!factors.empty() && factors.front().first == 2) {
            factors.front().second += extra_pow2;
        } else {
            factors.insert(factors.begin(), {2UL, static_cast<unsigned long>(extra_pow2)});
        }
    }

    std::vector<mpz_class> divisors{mpz_class(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divisors.size();
        mpz_class pk = 1;
        for (unsigned long i = 1; i <= e; ++i) {
            pk *= static_cast<unsigned long>(p);
            for (std::size_t j = 0; j < base; ++j) {
                divisors.push_back(divisors[j] * pk);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

std::vector<mpz_class> ac_consistent_orders(int n) {
    if (n != 4 && n != 6 && n != 8) {
        throw std::invalid_argument("ac_consistent_orders: supported for n in {4, 6, 8}");
    }
    const mpz_class d = contact_modulus(n);
    std::vector<mpz_class> out;
    for (const mpz_class& m : divisors_of_scaled_factorial(static_cast<unsigned long>(n), 4)) {
        if (m % 2 != 0) continue;  // the smooth order 2 divides the order
        mpz_class g;
        mpz_gcd_ui(g.get_mpz_t(), m.get_mpz_t(), 8);
        const mpz_class j0 = 8 / g;
        if ((j0 * m / 2) % d == 0) {
            out.push_back(m);
        }
    }
    return out;  // already ascending: filtered from a sorted list
}

}  // namespace dehn
