#pragma once

#include <cstddef>
#include <stdexcept>

#include "dehn/groups.hpp"
#include "dehn/intmat.hpp"

namespace dehn {

/// u * m * v = d with u, v unimodular and d diagonal, nonnegative, each
/// diagonal entry dividing the next.
struct SnfResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

/// Smith normal form over Z. Total on all integer matrices.
SnfResult snf(const IntMatrix& m);

struct CokernelKernel {
    AbelianGroupDescriptor cokernel;  // Z^rows / image(m)
    std::size_t kernel_rank = 0;      // rank of the integer kernel of m
};

/// Cokernel descriptor and kernel rank of m, read off the Smith normal form.
CokernelKernel coker_ker(const IntMatrix& m);

/// Thrown when matrix_order can neither certify infinite order nor find the
/// order within the search bound. Deliberately distinct from a precondition
/// failure: the caller may retry with a larger bound.
class order_search_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Order of m in GL(n, Z).
///
/// Finite(k) when k <= search_bound is minimal with m^k = 1. Infinite when a
/// unipotent certificate fires: (m - 1) != 0 and (m - 1)^2 = 0 force
/// m^k = 1 + k(m - 1) != 1 for all k >= 1, reported without any search.
/// Otherwise throws order_search_exceeded; the routine never guesses.
OrderResult matrix_order(const IntMatrix& m, unsigned long search_bound);

}  // namespace dehn
