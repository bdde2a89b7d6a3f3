#include "dehn/groups.hpp"

#include <sstream>
#include <stdexcept>

namespace dehn {

AbelianGroupDescriptor::AbelianGroupDescriptor(std::size_t free_rank,
                                               std::vector<mpz_class> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) {
            throw std::invalid_argument("AbelianGroupDescriptor: torsion orders must be >= 2");
        }
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0) {
            throw std::invalid_argument(
                "AbelianGroupDescriptor: torsion orders must form a divisibility chain");
        }
    }
}

AbelianGroupDescriptor AbelianGroupDescriptor::free_abelian(std::size_t rank) {
    return AbelianGroupDescriptor(rank, {});
}

AbelianGroupDescriptor AbelianGroupDescriptor::cyclic(const mpz_class& order) {
    return AbelianGroupDescriptor(0, {order});
}

std::string AbelianGroupDescriptor::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " ⊕ ";
        first = false;
    };
    if (free_rank_ == 1) {
        sep();
        os << "Z";
    } else if (free_rank_ > 1) {
        sep();
        os << "Z^" << free_rank_;
    }
    for (const auto& d : torsion_) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

OrderResult OrderResult::infinite() {
    OrderResult r;
    r.kind_ = Kind::infinite;
    return r;
}

OrderResult OrderResult::finite(const mpz_class& order) {
    if (order < 1) {
        throw std::invalid_argument("OrderResult::finite: order must be positive");
    }
    OrderResult r;
    r.kind_ = Kind::finite;
    r.lower_ = order;
    r.upper_ = order;
    return r;
}

OrderResult OrderResult::bounded(const mpz_class& lower, const mpz_class& upper) {
    if (lower < 1 || upper < 1) {
        throw std::invalid_argument("OrderResult::bounded: bounds must be positive");
    }
    if (upper % lower != 0) {
        throw std::invalid_argument("OrderResult::bounded: lower must divide upper");
    }
    OrderResult r;
    r.kind_ = Kind::bounded;
    r.lower_ = lower;
    r.upper_ = upper;
    return r;
}

OrderResult OrderResult::ambiguous(std::set<mpz_class> candidates) {
    if (candidates.size() < 2) {
        throw std::invalid_argument("OrderResult::ambiguous: need at least two candidates");
    }
    for (const auto& c : candidates) {
        if (c < 1) {
            throw std::invalid_argument("OrderResult::ambiguous: candidates must be positive");
        }
    }
    OrderResult r;
    r.kind_ = Kind::ambiguous;
    r.candidates_ = std::move(candidates);
    return r;
}

const mpz_class& OrderResult::finite_order() const {
    if (kind_ != Kind::finite) {
        throw std::logic_error("OrderResult: not a finite order");
    }
    return lower_;
}

const mpz_class& OrderResult::lower() const {
    if (kind_ != Kind::bounded) {
        throw std::logic_error("OrderResult: not a bounded order");
    }
    return lower_;
}

const mpz_class& OrderResult::upper() const {
    if (kind_ != Kind::bounded) {
        throw std::logic_error("OrderResult: not a bounded order");
    }
    return upper_;
}

const std::set<mpz_class>& OrderResult::candidates() const {
    if (kind_ != Kind::ambiguous) {
        throw std::logic_error("OrderResult: not an ambiguous order");
    }
    return candidates_;
}

std::string OrderResult::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::infinite:
            os << "infinite";
            break;
        case Kind::finite:
            os << "finite of order " << lower_;
            break;
        case Kind::bounded:
            os << "finite; divisible by " << lower_ << " and dividing " << upper_;
            break;
        case Kind::ambiguous: {
            os << "one of {";
            bool first = true;
            for (const auto& c : candidates_) {
                if (!first) os << ", ";
                first = false;
                os << c;
            }
            os << "}";
            break;
        }
    }
    return os.str();
}

}  // namespace dehn
