#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dehn/plumbing.hpp"
#include "dehn/snf.hpp"

using namespace dehn;

namespace {

// Chain with the opposite skew sign convention, for the convention-invariance
// checks.
BilinearLattice flipped_chain(std::size_t l) {
    IntMatrix gram(l, l);
    for (std::size_t i = 0; i + 1 < l; ++i) {
        gram(i, i + 1) = -1;
        gram(i + 1, i) = 1;
    }
    return make_lattice(std::move(gram), Symmetry::skew);
}

// Chain relabelled end to end: e_i -> e_(l+1-i).
BilinearLattice reversed_chain(std::size_t l) {
    const BilinearLattice chain = a_chain_lattice(l, 3);
    IntMatrix gram(l, l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            gram(i, j) = chain.gram(l - 1 - i, l - 1 - j);
        }
    }
    return make_lattice(std::move(gram), Symmetry::skew);
}

}  // namespace

TEST_CASE("a_chain_lattice: pinned Gram matrices") {
    CHECK(a_chain_lattice(2, 3).gram == IntMatrix{{0, 1}, {-1, 0}});
    CHECK(a_chain_lattice(3, 5).gram == IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    const BilinearLattice a2 = a_chain_lattice(2, 2);
    CHECK(a2.gram == IntMatrix{{-2, 1}, {1, -2}});
    CHECK(a2.symmetry == Symmetry::symmetric);
    CHECK(a2.gram.det() == 3);  // classical A_2 discriminant
    CHECK(a_chain_lattice(2, 4).gram == IntMatrix{{2, 1}, {1, 2}});
    CHECK(a_chain_lattice(1, 3).gram == IntMatrix(1, 1));

    CHECK_THROWS_AS(a_chain_lattice(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(a_chain_lattice(2, 1), std::invalid_argument);
}

TEST_CASE("make_lattice: symmetry validation") {
    CHECK_THROWS_AS(make_lattice(IntMatrix{{0, 1}, {1, 0}}, Symmetry::skew),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(IntMatrix{{1, 1}, {-1, 0}}, Symmetry::skew),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(IntMatrix{{0, 1}, {-1, 0}}, Symmetry::symmetric),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(IntMatrix(2, 3), Symmetry::skew), std::invalid_argument);
}

TEST_CASE("skew chain is unimodular exactly in even rank") {
    for (std::size_t l = 1; l <= 20; ++l) {
        const SnfResult s = snf(a_chain_lattice(l, 3).gram);
        bool unimodular = true;
        for (std::size_t t = 0; t < l; ++t) {
            if (s.d(t, t) != 1) unimodular = false;
        }
        CHECK(unimodular == (l % 2 == 0));
    }
}

TEST_CASE("open_book_boundary_homology: pinned values and parity pattern") {
    {
        const auto inv = open_book_boundary_homology(3, 4);
        CHECK(inv.h_n.is_trivial());
        CHECK(inv.h_n_plus_1.is_trivial());
        CHECK(inv.sphere_type != SphereType::not_a_sphere);
    }
    {
        const auto inv = open_book_boundary_homology(4, 4);
        CHECK(inv.h_n == AbelianGroupDescriptor::free_abelian(1));
        CHECK(inv.h_n_plus_1 == AbelianGroupDescriptor::free_abelian(1));
        CHECK(inv.sphere_type == SphereType::not_a_sphere);
    }
    {
        const auto inv = open_book_boundary_homology(2, 4);
        CHECK(inv.h_n == AbelianGroupDescriptor::free_abelian(1));
        CHECK(inv.h_n_plus_1 == AbelianGroupDescriptor::free_abelian(1));
    }
    for (unsigned long k = 2; k <= 12; ++k) {
        const auto inv = open_book_boundary_homology(k, 6);
        if (k % 2 == 1) {
            CHECK(inv.h_n.is_trivial());
            CHECK(inv.h_n_plus_1.is_trivial());
        } else {
            CHECK(inv.h_n == AbelianGroupDescriptor::free_abelian(1));
            CHECK(inv.h_n_plus_1 == AbelianGroupDescriptor::free_abelian(1));
        }
    }
    CHECK_THROWS_AS(open_book_boundary_homology(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(open_book_boundary_homology(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(open_book_boundary_homology(3, 0), std::invalid_argument);
}

TEST_CASE("arf_a_chain: anchors") {
    SUBCASE("rank 2 by hand") {
        // q(00)=0, q(01)=1, q(10)=1, q(11)=1+1+<e1,e2> = 1: majority 1.
        int ones = 0;
        for (int x0 = 0; x0 <= 1; ++x0) {
            for (int x1 = 0; x1 <= 1; ++x1) {
                const int q = (x0 + x1 + x0 * x1) % 2;
                ones += q;
            }
        }
        CHECK(ones == 3);
        CHECK(arf_a_chain(2) == 1);
    }
    CHECK(arf_a_chain(6) == 0);   // boundary at twist power 7 = -1 mod 8 is standard
    CHECK(arf_a_chain(8) == 0);   // twist power 9 = +1 mod 8
    CHECK(arf_a_chain(4) == 1);

    CHECK_THROWS_AS(arf_a_chain(3), std::invalid_argument);
    CHECK_THROWS_AS(arf_a_chain(0), std::invalid_argument);
    CHECK_THROWS_AS(arf_a_chain(26), std::invalid_argument);
}

TEST_CASE("arf: rejects non-refinements") {
    QuadraticRefinement q;
    q.lattice = a_chain_lattice(2, 2);  // symmetric, not skew
    q.q_basis = {1, 1};
    CHECK_THROWS_AS(arf(q), std::invalid_argument);

    QuadraticRefinement deg;
    deg.lattice = a_chain_lattice(3, 3);  // odd rank: degenerate mod 2
    deg.q_basis = {1, 1, 1};
    CHECK_THROWS_AS(arf(deg), std::invalid_argument);

    QuadraticRefinement mismatch;
    mismatch.lattice = a_chain_lattice(2, 3);
    mismatch.q_basis = {1};
    CHECK_THROWS_AS(arf(mismatch), std::invalid_argument);
}

TEST_CASE("arf: invariant under relabelling and the sign convention") {
    for (std::size_t l = 2; l <= 12; l += 2) {
        const int base = arf_a_chain(l);

        QuadraticRefinement rev;
        rev.lattice = reversed_chain(l);
        rev.q_basis.assign(l, 1);
        CHECK(arf(rev) == base);

        QuadraticRefinement flip;
        flip.lattice = flipped_chain(l);
        flip.q_basis.assign(l, 1);
        CHECK(arf(flip) == base);
    }
}

TEST_CASE("cokernel is invariant under the skew sign convention") {
    for (std::size_t l = 1; l <= 10; ++l) {
        const auto a = coker_ker(a_chain_lattice(l, 3).gram);
        const auto b = coker_ker(flipped_chain(l).gram);
        CHECK(a.cokernel == b.cokernel);
        CHECK(a.kernel_rank == b.kernel_rank);
    }
}

TEST_CASE("boundary pattern up to k = 21 and the mod-8 Arf law") {
    const AbelianGroupDescriptor z = AbelianGroupDescriptor::free_abelian(1);
    for (unsigned long k = 2; k <= 21; ++k) {
        const auto inv = open_book_boundary_homology(k, 4);
        if (k % 2 == 1) {
            CHECK(inv.h_n.is_trivial());
            CHECK(inv.h_n_plus_1.is_trivial());
            // Standard sphere exactly at k = +/-1 mod 8.
            const bool standard_power = (k % 8 == 1 || k % 8 == 7);
            CHECK((arf_a_chain(k - 1) == 0) == standard_power);
        } else {
            CHECK(inv.h_n == z);
            CHECK(inv.h_n_plus_1 == z);
        }
    }
}

TEST_CASE("boundary_sphere_type: anchors") {
    CHECK(boundary_sphere_type(3, 8).sphere_type == SphereType::kervaire_sphere);
    CHECK(boundary_sphere_type(9, 4).sphere_type == SphereType::standard_sphere);
    CHECK(boundary_sphere_type(6, 4).sphere_type == SphereType::not_a_sphere);
    CHECK(boundary_sphere_type(7, 4).sphere_type == SphereType::standard_sphere);
    // Arf 1 but the 13-dimensional Kervaire sphere is standard.
    const auto n6 = boundary_sphere_type(3, 6);
    CHECK(n6.sphere_type == SphereType::standard_sphere);
    CHECK_FALSE(n6.notes.empty());
    // Arf 1 in the open dimension 125.
    CHECK(boundary_sphere_type(3, 62).sphere_type == SphereType::sphere_of_unknown_class);
    // Homology spheres have trivial homology recorded.
    const auto k3 = boundary_sphere_type(3, 4);
    CHECK(k3.sphere_type == SphereType::kervaire_sphere);
    CHECK(k3.h_n.is_trivial());
    CHECK(k3.h_n_plus_1.is_trivial());
}
