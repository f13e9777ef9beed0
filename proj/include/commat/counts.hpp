#ifndef COMMAT_COUNTS_HPP
#define COMMAT_COUNTS_HPP

#include <vector>

#include "commat/arith.hpp"
#include "commat/prime_power.hpp"
#include "commat/rational.hpp"

namespace commat {

/// An exact matrix count together with its normalization by |GL_n(F_q)|.
/// Invariant: value = normalized * gl_order(q, n) exactly, value >= 0.
struct CountResult {
    PrimePower q;
    int n;
    BigInt value;
    Rational normalized;
};

/// Q_q(n): ordered pairs (A,B) of n x n matrices over F_q with AB = BA.
/// Computed through the partition sum
///   Q_q(n) = |GL_n| * sum_{lambda |- n} q^{sum_k b_k} / prod_k f_q(b_k).
CountResult commuting_pairs(const PrimePower& q, int n);

/// Coefficient of w^n in the commuting-pair generating function
///   prod_{l>=1, j>=0} (1 - q^{1-j} w^l)^{-1},
/// computed by multiplying the per-l Euler factors
///   sum_{k>=0} q^k w^{lk} / f_q(k)
/// as truncated rational power series. Independent of the partition-sum
/// route; the two must agree coefficient by coefficient.
Rational commuting_series_coeff(const PrimePower& q, int n);

/// Coefficients 0..nmax of the same series in one pass.
std::vector<Rational> commuting_series_coeffs(const PrimePower& q, int nmax);

/// |Nilp_n(F_q)| / |GL_n(F_q)| = q^{-n} / f_q(n)  (coefficient of w^n in
/// prod_{j>=1} (1 - q^{-j} w)^{-1}).
Rational nilpotent_series_coeff(const PrimePower& q, int n);

/// |Nilp_n(F_q)|, an exact integer equal to q^{n^2-n}.
CountResult nilpotent_count(const PrimePower& q, int n);

/// Coefficient of w^n in prod_{l>=1, j>=0} (1 - q^{-(1+j)} w^l)^{-1}, as the
/// partition sum  sum_{lambda |- n} q^{-sum b_k} / prod f_q(b_k).
Rational nilpotent_commuting_series_coeff(const PrimePower& q, int n);

/// Ordered pairs of commuting nilpotent matrices, an exact integer.
CountResult nilpotent_commuting_pairs(const PrimePower& q, int n);

} // namespace commat

#endif
