#include "commat/prime_power.hpp"

#include <stdexcept>

namespace commat {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                             19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Complete witness set for n < 2^64 (Sinclair).
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimePower::PrimePower(std::uint64_t p, unsigned r) : p_(p), r_(r) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("PrimePower: p = " + std::to_string(p) + " is not prime");
    if (r < 1)
        throw std::invalid_argument("PrimePower: r must be >= 1");
    q_ = pow_int(BigInt(static_cast<unsigned long>(p)), r);
}

PrimePower PrimePower::from_q(const BigInt& q) {
    if (q < 2) throw std::invalid_argument("PrimePower: q must be >= 2");
    // Largest r with q = root^r exact gives a prime root iff q is a prime power.
    const unsigned maxr = static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2));
    for (unsigned r = maxr; r >= 1; --r) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), r) != 0) {
            if (!root.fits_ulong_p()) // p beyond the 64-bit artifact bound
                break;
            const std::uint64_t p = root.get_ui();
            if (is_prime_u64(p)) return PrimePower(p, r);
            break; // exact maximal root exists but is composite
        }
    }
    throw std::invalid_argument("PrimePower: " + q.get_str() + " is not a prime power");
}

} // namespace commat
