#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace dehn {

/// Finitely generated abelian group in canonical form: Z^free_rank plus
/// cyclic factors Z/d_1 + ... + Z/d_k with d_i >= 2 and d_i | d_{i+1}.
/// Equality is structural, which is what makes descriptors testable.
class AbelianGroupDescriptor {
public:
    AbelianGroupDescriptor() = default;  // trivial group
    AbelianGroupDescriptor(std::size_t free_rank, std::vector<mpz_class> torsion);

    static AbelianGroupDescriptor trivial() { return {}; }
    static AbelianGroupDescriptor free_abelian(std::size_t rank);
    static AbelianGroupDescriptor cyclic(const mpz_class& order);  // order >= 2

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    bool operator==(const AbelianGroupDescriptor& other) const = default;

    /// "0", "Z", "Z^2", "Z/2", "Z ⊕ Z/2 ⊕ Z/4", ...
    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<mpz_class> torsion_;
};

/// Outcome of an order computation in a group.
///
/// Infinite is only reported with a certificate; Bounded carries a divisor of
/// the order and a multiple of it; Ambiguous lists the surviving candidates.
class OrderResult {
public:
    enum class Kind { infinite, finite, bounded, ambiguous };

    static OrderResult infinite();
    static OrderResult finite(const mpz_class& order);                       // order >= 1
    static OrderResult bounded(const mpz_class& lower, const mpz_class& upper);
    static OrderResult ambiguous(std::set<mpz_class> candidates);            // >= 2 entries

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_infinite() const { return kind_ == Kind::infinite; }

    const mpz_class& finite_order() const;
    const mpz_class& lower() const;
    const mpz_class& upper() const;
    const std::set<mpz_class>& candidates() const;

    bool operator==(const OrderResult& other) const = default;

    std::string to_string() const;

private:
    OrderResult() = default;
    Kind kind_ = Kind::infinite;
    mpz_class lower_;
    mpz_class upper_;
    std::set<mpz_class> candidates_;
};

}  // namespace dehn
