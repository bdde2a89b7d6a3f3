#include "dehn/classification.hpp"

#include <stdexcept>

namespace dehn {

std::string to_string(Category c) {
    switch (c) {
        case Category::symp: return "symp";
        case Category::diff: return "diff";
        case Category::homeo: return "homeo";
        case Category::haut: return "haut";
        case Category::almost_complex: return "almost-complex";
    }
    return "?";
}

Category category_from_string(const std::string& name) {
    if (name == "symp") return Category::symp;
    if (name == "diff") return Category::diff;
    if (name == "homeo") return Category::homeo;
    if (name == "haut") return Category::haut;
    if (name == "almost-complex" || name == "ac") return Category::almost_complex;
    throw std::invalid_argument("unknown category: " + name);
}

std::string to_string(KervaireStatus s) {
    switch (s) {
        case KervaireStatus::trivial: return "trivial";
        case KervaireStatus::nontrivial: return "nontrivial";
        case KervaireStatus::unknown: return "unknown";
    }
    return "?";
}

KervaireStatus kervaire_status(int dim) {
    return kervaire_entry(dim).status;
}

KervaireEntry kervaire_entry(int dim) {
    if (dim < 5 || dim % 4 != 1) {
        throw std::invalid_argument("Kervaire sphere status is tabulated for dimensions 1 mod 4, >= 5");
    }
    switch (dim) {
        case 5:
        case 13:
        case 29:
        case 61:
            return {KervaireStatus::trivial,
                    "Kervaire sphere of dimension " + std::to_string(dim) +
                        " is standard (Hill-Hopkins-Ravenel, Theorem 1.3)"};
        case 125:
            return {KervaireStatus::unknown,
                    "triviality of the 125-dimensional Kervaire sphere is open "
                    "(Hill-Hopkins-Ravenel leave it unresolved)"};
        default:
            return {KervaireStatus::nontrivial,
                    "Kervaire sphere of dimension " + std::to_string(dim) +
                        " is exotic (Hill-Hopkins-Ravenel, Theorem 1.3)"};
    }
}

OrderResult twist_order(Category cat, int n) {
    return twist_order(cat, n, kervaire_status);
}

OrderResult twist_order(Category cat, int n, const KervaireTable& table) {
    if (n < 2) {
        throw std::invalid_argument("twist_order: n must be >= 2");
    }
    if (cat == Category::almost_complex) {
        throw std::invalid_argument(
            "twist_order: the almost-complex order is only bounded, not determined; "
            "use ac_order_bounds");
    }
    if (n % 2 != 0) {
        return OrderResult::infinite();
    }
    switch (cat) {
        case Category::symp:
            return OrderResult::infinite();
        case Category::diff: {
            if (n == 2 || n == 6) return OrderResult::finite(2);
            switch (table(2 * n + 1)) {
                case KervaireStatus::trivial: return OrderResult::finite(4);
                case KervaireStatus::nontrivial: return OrderResult::finite(8);
                case KervaireStatus::unknown:
                    return OrderResult::ambiguous({mpz_class(4), mpz_class(8)});
            }
            break;
        }
        case Category::homeo:
        case Category::haut:
            return OrderResult::finite((n == 2 || n == 6) ? 2 : 4);
        case Category::almost_complex:
            break;  // unreachable
    }
    throw std::logic_error("twist_order: unhandled case");
}

AbelianGroupDescriptor chi_r_target(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("chi_r_target: n must be even and >= 4");
    }
    if (n == 6) return AbelianGroupDescriptor::trivial();
    if (n % 8 == 0) return AbelianGroupDescriptor(0, {mpz_class(2), mpz_class(2)});
    return AbelianGroupDescriptor::cyclic(2);
}

AbelianGroupDescriptor theta13_fact() {
    return AbelianGroupDescriptor::cyclic(3);
}

bool square_trivial_in_odd_group(const mpz_class& group_order) {
    if (group_order < 1) {
        throw std::invalid_argument("group order must be positive");
    }
    // y in G with |G| odd and y^2 = e: ord(y) divides gcd(|G|, 2) = 1.
    return group_order % 2 != 0;
}

bool fibre_homotopy_trivial_possible(int base_sphere_dim) {
    if (base_sphere_dim < 1) {
        throw std::invalid_argument("sphere dimension must be >= 1");
    }
    return base_sphere_dim == 1 || base_sphere_dim == 3 || base_sphere_dim == 7;
}

}  // namespace dehn
