#include "commat/counts.hpp"

#include <stdexcept>

#include "commat/errors.hpp"
#include "commat/partitions.hpp"

namespace commat {

namespace {

std::vector<Rational> f_q_table(const PrimePower& q, int nmax) {
    std::vector<Rational> f(static_cast<size_t>(nmax) + 1);
    f[0] = 1;
    Rational qj(1);
    for (int j = 1; j <= nmax; ++j) {
        qj *= q.q();
        f[static_cast<size_t>(j)] = f[static_cast<size_t>(j) - 1] * (1 - Rational(1) / qj);
    }
    return f;
}

// sum over partitions of n of q^{sign * #parts} / prod_k f_q(b_k)
Rational partition_sum(const PrimePower& q, int n, int sign) {
    const auto f = f_q_table(q, n);
    // powers of q^{sign} up to n parts
    std::vector<Rational> qpow(static_cast<size_t>(n) + 1);
    qpow[0] = 1;
    const Rational base = sign >= 0 ? Rational(q.q()) : Rational(1, q.q());
    for (int k = 1; k <= n; ++k) qpow[static_cast<size_t>(k)] = qpow[static_cast<size_t>(k) - 1] * base;

    Rational total(0);
    for_each_partition(n, [&](const Partition& p) {
        Rational den(1);
        for (const auto& [k, b] : p.nonzero()) {
            (void)k;
            den *= f[b];
        }
        total += qpow[p.part_count()] / den;
    });
    return total;
}

} // namespace

CountResult commuting_pairs(const PrimePower& q, int n) {
    if (n < 0) throw std::invalid_argument("commuting_pairs: n must be >= 0");
    const Rational norm = partition_sum(q, n, +1);
    const BigInt gl = gl_order(q, n);
    BigInt value = require_integer(norm * gl, "commuting_pairs");
    return CountResult{q, n, value, norm};
}

std::vector<Rational> commuting_series_coeffs(const PrimePower& q, int nmax) {
    if (nmax < 0) throw std::invalid_argument("commuting_series_coeffs: nmax must be >= 0");
    const auto f = f_q_table(q, nmax);
    std::vector<Rational> poly(static_cast<size_t>(nmax) + 1);
    poly[0] = 1;
    // The l-th Euler factor only has terms at degrees l*k, so truncating the
    // product at l <= nmax and each factor at k <= nmax/l is exact for the
    // first nmax+1 coefficients.
    for (int l = 1; l <= nmax; ++l) {
        std::vector<Rational> next(static_cast<size_t>(nmax) + 1);
        Rational qk(1); // q^k
        for (int k = 0; l * k <= nmax; ++k) {
            if (k > 0) qk *= q.q();
            const Rational coeff = qk / f[static_cast<size_t>(k)];
            const int deg = l * k;
            for (int i = 0; i + deg <= nmax; ++i) {
                if (poly[static_cast<size_t>(i)] != 0)
                    next[static_cast<size_t>(i + deg)] += poly[static_cast<size_t>(i)] * coeff;
            }
        }
        poly.swap(next);
    }
    return poly;
}

Rational commuting_series_coeff(const PrimePower& q, int n) {
    if (n < 0) throw std::invalid_argument("commuting_series_coeff: n must be >= 0");
    return commuting_series_coeffs(q, n).back();
}

Rational nilpotent_series_coeff(const PrimePower& q, int n) {
    if (n < 0) throw std::invalid_argument("nilpotent_series_coeff: n must be >= 0");
    return Rational(1, pow_int(q.q(), static_cast<unsigned long>(n))) / f_q(q, n);
}

CountResult nilpotent_count(const PrimePower& q, int n) {
    const Rational norm = nilpotent_series_coeff(q, n);
    const BigInt gl = gl_order(q, n);
    BigInt value = require_integer(norm * gl, "nilpotent_count");
    return CountResult{q, n, value, norm};
}

Rational nilpotent_commuting_series_coeff(const PrimePower& q, int n) {
    if (n < 0) throw std::invalid_argument("nilpotent_commuting_series_coeff: n must be >= 0");
    return partition_sum(q, n, -1);
}

CountResult nilpotent_commuting_pairs(const PrimePower& q, int n) {
    const Rational norm = nilpotent_commuting_series_coeff(q, n);
    const BigInt gl = gl_order(q, n);
    BigInt value = require_integer(norm * gl, "nilpotent_commuting_pairs");
    return CountResult{q, n, value, norm};
}

} // namespace commat
