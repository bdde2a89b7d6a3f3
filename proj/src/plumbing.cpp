#include "dehn/plumbing.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "dehn/classification.hpp"
#include "dehn/snf.hpp"

namespace dehn {

namespace {

constexpr std::size_t kArfRankCap = 24;  // 2^24 evaluations; plenty at desk scale

}  // namespace

BilinearLattice make_lattice(IntMatrix gram, Symmetry symmetry) {
    if (!gram.is_square()) {
        throw std::invalid_argument("lattice Gram matrix must be square");
    }
    if (symmetry == Symmetry::symmetric) {
        if (gram.transpose() != gram) {
            throw std::invalid_argument("Gram matrix is not symmetric");
        }
    } else {
        if (gram.transpose() != -gram) {
            throw std::invalid_argument("Gram matrix is not skew");
        }
        for (std::size_t i = 0; i < gram.rows(); ++i) {
            if (gram(i, i) != 0) {
                throw std::invalid_argument("skew Gram matrix must have zero diagonal");
            }
        }
    }
    BilinearLattice lat;
    lat.rank = gram.rows();
    lat.gram = std::move(gram);
    lat.symmetry = symmetry;
    return lat;
}

BilinearLattice a_chain_lattice(std::size_t l, int m) {
    if (l < 1) {
        throw std::invalid_argument("a_chain_lattice: need at least one plumbing factor");
    }
    if (m < 2) {
        throw std::invalid_argument("a_chain_lattice: sphere dimension must be >= 2");
    }
    IntMatrix gram(l, l);
    const bool even = (m % 2 == 0);
    if (even) {
        const long diag = ((m / 2) % 2 == 0) ? 2 : -2;
        for (std::size_t i = 0; i < l; ++i) gram(i, i) = diag;
    }
    for (std::size_t i = 0; i + 1 < l; ++i) {
        gram(i, i + 1) = 1;
        gram(i + 1, i) = even ? 1 : -1;
    }
    return make_lattice(std::move(gram), even ? Symmetry::symmetric : Symmetry::skew);
}

int arf(const QuadraticRefinement& refinement) {
    const BilinearLattice& lat = refinement.lattice;
    if (lat.symmetry != Symmetry::skew) {
        throw std::invalid_argument("arf: refinement must sit on a skew lattice");
    }
    if (refinement.q_basis.size() != lat.rank) {
        throw std::invalid_argument("arf: basis value count does not match rank");
    }
    if (lat.rank > kArfRankCap) {
        throw std::invalid_argument("arf: rank exceeds the exhaustive-scan cap of 24");
    }
    if (lat.gram.det() % 2 == 0) {
        throw std::invalid_argument("arf: mod-2 form is degenerate");
    }

    const std::size_t r = lat.rank;
    // upper_mask[i]: bits j > i with <e_i, e_j> odd. With these,
    // q(x) = sum_{i in x} q(e_i) + sum_{i<j in x} <e_i, e_j>  (mod 2).
    std::vector<std::uint32_t> upper_mask(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            if (lat.gram(i, j) % 2 != 0) {
                upper_mask[i] |= (1u << j);
            }
        }
    }

    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;
    const std::uint32_t end = 1u << r;
    for (std::uint32_t x = 0; x < end; ++x) {
        int parity = 0;
        std::uint32_t bits = x;
        while (bits != 0) {
            const unsigned i = std::countr_zero(bits);
            bits &= bits - 1;
            parity ^= refinement.q_basis[i] & 1;
            parity ^= std::popcount(upper_mask[i] & x) & 1;
        }
        (parity == 0 ? zeros : ones) += 1;
    }
    if (zeros == ones) {
        throw std::logic_error("arf: counts balanced; form was degenerate after all");
    }
    return zeros > ones ? 0 : 1;
}

int arf_a_chain(std::size_t l) {
    if (l < 2 || l % 2 != 0) {
        throw std::invalid_argument("arf_a_chain: rank must be even and >= 2");
    }
    QuadraticRefinement q;
    q.lattice = a_chain_lattice(l, 3);  // any odd fibre dimension; only mod 2 matters
    q.q_basis.assign(l, 1);             // q = 1 on vanishing cycles
    return arf(q);
}

std::string to_string(SphereType t) {
    switch (t) {
        case SphereType::not_a_sphere: return "not_a_sphere";
        case SphereType::standard_sphere: return "standard_sphere";
        case SphereType::kervaire_sphere: return "kervaire_sphere";
        case SphereType::sphere_of_unknown_class: return "sphere_of_unknown_class";
    }
    return "?";
}

namespace {

void require_boundary_args(unsigned long k, int n) {
    if (k < 2) {
        throw std::invalid_argument("open book boundary: twist power k must be >= 2");
    }
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("open book boundary: n must be even and >= 2");
    }
}

}  // namespace

BoundaryInvariants open_book_boundary_homology(unsigned long k, int n) {
    require_boundary_args(k, n);
    const BilinearLattice lat = a_chain_lattice(k - 1, n + 1);
    const CokernelKernel ck = coker_ker(lat.gram);

    BoundaryInvariants inv;
    inv.h_n = ck.cokernel;
    inv.h_n_plus_1 = AbelianGroupDescriptor::free_abelian(ck.kernel_rank);
    if (inv.h_n.is_trivial() && inv.h_n_plus_1.is_trivial()) {
        inv.sphere_type = SphereType::sphere_of_unknown_class;
        inv.notes.push_back("homology sphere; class not determined by homology alone");
    } else {
        inv.sphere_type = SphereType::not_a_sphere;
    }
    return inv;
}

BoundaryInvariants boundary_sphere_type(unsigned long k, int n) {
    BoundaryInvariants inv = open_book_boundary_homology(k, n);
    if (inv.sphere_type == SphereType::not_a_sphere) {
        return inv;
    }
    inv.notes.clear();

    // Homology sphere; k is odd here. Decide the class via the Arf invariant
    // of the chain refinement.
    const int arf_bit = arf_a_chain(k - 1);
    if (arf_bit == 0) {
        inv.sphere_type = SphereType::standard_sphere;
        inv.notes.push_back("Arf invariant 0");
        return inv;
    }
    inv.notes.push_back("Arf invariant 1: boundary is the Kervaire sphere");
    switch (kervaire_status(2 * n + 1)) {
        case KervaireStatus::nontrivial:
            inv.sphere_type = SphereType::kervaire_sphere;
            break;
        case KervaireStatus::trivial:
            inv.sphere_type = SphereType::standard_sphere;
            inv.notes.push_back(kervaire_entry(2 * n + 1).citation);
            break;
        case KervaireStatus::unknown:
            inv.sphere_type = SphereType::sphere_of_unknown_class;
            inv.notes.push_back(kervaire_entry(2 * n + 1).citation);
            break;
    }
    return inv;
}

}  // namespace dehn
