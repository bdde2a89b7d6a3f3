#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>

#include "dehn/groups.hpp"

namespace dehn {

/// Mapping class groups of T*S^n, ordered by forgetfulness:
/// symplectic -> smooth -> topological -> homotopy self-equivalences.
/// almost_complex sits between symp and diff and has its own arithmetic
/// (see bott_ac.hpp); the order oracle here rejects it.
enum class Category { symp, diff, homeo, haut, almost_complex };

std::string to_string(Category c);
Category category_from_string(const std::string& name);

enum class KervaireStatus { trivial, nontrivial, unknown };

std::string to_string(KervaireStatus s);

/// Status plus the literature citation the value is imported from.
struct KervaireEntry {
    KervaireStatus status;
    std::string citation;
};

/// Triviality of the Kervaire sphere of the given dimension (= 1 mod 4,
/// >= 5): trivial in dimensions 5, 13, 29, 61; open in dimension 125;
/// nontrivial otherwise.
KervaireStatus kervaire_status(int dim);
KervaireEntry kervaire_entry(int dim);

/// Injectable status table, so the dependence of the smooth order on the
/// Kervaire column can be exercised directly.
using KervaireTable = std::function<KervaireStatus(int)>;

/// Order of the twist class in the given mapping class group of T*S^n.
///
/// Odd n: infinite in every category. Even n: infinite symplectically;
/// smoothly 2 for n in {2, 6}, else 4/8/ambiguous{4,8} according to the
/// Kervaire sphere of dimension 2n+1 being trivial/nontrivial/open;
/// topologically and homotopically 2 for n in {2, 6} and 4 otherwise.
/// The n in {2, 6} clause takes precedence over the Kervaire clause.
OrderResult twist_order(Category cat, int n);
OrderResult twist_order(Category cat, int n, const KervaireTable& table);

/// Target of the chi_r homomorphism on the variation-trivial subgroup:
/// 0 for n = 6, Z/2 + Z/2 for n = 0 mod 8, Z/2 otherwise (n even, >= 4).
AbelianGroupDescriptor chi_r_target(int n);

/// The group of homotopy 13-spheres, Z/3.
AbelianGroupDescriptor theta13_fact();

/// The parity step used at n = 6: an element of a finite group of odd order
/// whose square is trivial is itself trivial. True iff the order is odd.
bool square_trivial_in_odd_group(const mpz_class& group_order);

/// Whether the unit sphere bundle of S^(d) can be fibre homotopy trivial,
/// i.e. d in {1, 3, 7} (Hopf-invariant-one dimensions).
bool fibre_homotopy_trivial_possible(int base_sphere_dim);

}  // namespace dehn
