#ifndef COMMAT_ARITH_HPP
#define COMMAT_ARITH_HPP

#include "commat/prime_power.hpp"
#include "commat/rational.hpp"

namespace commat {

/// f_q(n) = prod_{j=1}^{n} (1 - q^{-j}), exact. f_q(0) = 1 (empty product).
Rational f_q(const PrimePower& q, int n);

/// |GL_n(F_q)| = q^{n^2} f_q(n), an exact integer.
BigInt gl_order(const PrimePower& q, int n);

} // namespace commat

#endif
