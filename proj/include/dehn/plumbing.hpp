#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dehn/groups.hpp"
#include "dehn/intmat.hpp"

namespace dehn {

enum class Symmetry { symmetric, skew };

/// Free finitely generated lattice with a symmetric or skew Gram matrix.
struct BilinearLattice {
    std::size_t rank = 0;
    IntMatrix gram;
    Symmetry symmetry = Symmetry::symmetric;
};

/// Validates the (skew-)symmetry invariant; throws on violation.
BilinearLattice make_lattice(IntMatrix gram, Symmetry symmetry);

/// Intersection form of the chain plumbing of l disc cotangent bundles of
/// S^m, basis the vanishing cycles e_1..e_l with consecutive pairing
/// <e_i, e_{i+1}> = 1 and non-adjacent pairs zero.
///
/// m even: symmetric, diagonal 2 * (-1)^(m/2). m odd: skew, zero diagonal,
/// <e_{i+1}, e_i> = -1. The sign convention on the skew off-diagonal is a
/// choice; cokernel and Arf below are invariant under flipping it, which the
/// test suite checks.
BilinearLattice a_chain_lattice(std::size_t l, int m);

/// Quadratic refinement of the mod-2 reduction of a skew lattice:
/// q(x + y) = q(x) + q(y) + <x, y> mod 2, pinned by its basis values.
struct QuadraticRefinement {
    BilinearLattice lattice;
    std::vector<int> q_basis;  // one bit per basis vector
};

/// Arf invariant by exhaustive evaluation over all 2^rank vectors:
/// 0 iff strictly more vectors take value 0 than 1. Requires the mod-2 form
/// to be nondegenerate (odd Gram determinant) and rank <= 24.
int arf(const QuadraticRefinement& refinement);

/// Arf invariant of the skew chain lattice of even rank l with q = 1 on every
/// vanishing cycle, the refinement carried by a Milnor-fibre boundary.
/// Odd l is rejected: the chain form is degenerate there.
int arf_a_chain(std::size_t l);

enum class SphereType {
    not_a_sphere,
    standard_sphere,
    kervaire_sphere,
    sphere_of_unknown_class,
};

std::string to_string(SphereType t);

/// Invariants of the open-book boundary of the chain plumbing: homology in
/// the two middle degrees plus a sphere classification.
/// sphere_type != not_a_sphere implies both homology groups are trivial.
struct BoundaryInvariants {
    AbelianGroupDescriptor h_n;
    AbelianGroupDescriptor h_n_plus_1;
    SphereType sphere_type = SphereType::not_a_sphere;
    std::vector<std::string> notes;
};

/// Homology of the boundary of the chain plumbing of (k-1) copies of
/// D*S^(n+1), the open book of the k-th twist power: H_n is the cokernel of
/// the chain Gram matrix and H_(n+1) the free part of its kernel, via the
/// long exact sequence of the pair. Requires k >= 2 and n even (odd middle
/// dimension, skew case).
///
/// sphere_type here only distinguishes "homology is not that of a sphere"
/// from "homology sphere, class not determined by this computation" (the
/// latter reported as sphere_of_unknown_class; see boundary_sphere_type).
BoundaryInvariants open_book_boundary_homology(unsigned long k, int n);

/// Full classification: homology first, then for homology spheres the Arf
/// invariant of the chain refinement, resolved against the Kervaire-sphere
/// status of dimension 2n+1 (trivial Kervaire sphere demotes to standard;
/// the open dimension 125 yields sphere_of_unknown_class).
BoundaryInvariants boundary_sphere_type(unsigned long k, int n);

}  // namespace dehn
