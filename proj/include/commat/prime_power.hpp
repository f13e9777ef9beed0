#ifndef COMMAT_PRIME_POWER_HPP
#define COMMAT_PRIME_POWER_HPP

#include <cstdint>
#include "commat/rational.hpp"

namespace commat {

/// Deterministic Miller-Rabin for 64-bit integers (fixed witness set,
/// proven complete below 2^64).
bool is_prime_u64(std::uint64_t n);

/// A base field size q = p^r, p prime, r >= 1. Validated on construction.
class PrimePower {
public:
    PrimePower(std::uint64_t p, unsigned r);

    /// Parse q itself; finds the unique (p, r) with q = p^r or throws
    /// std::invalid_argument if q is not a prime power.
    static PrimePower from_q(const BigInt& q);

    std::uint64_t p() const { return p_; }
    unsigned r() const { return r_; }
    const BigInt& q() const { return q_; }

    bool operator==(const PrimePower& o) const { return p_ == o.p_ && r_ == o.r_; }

private:
    std::uint64_t p_;
    unsigned r_;
    BigInt q_; // p^r, cached
};

} // namespace commat

#endif
