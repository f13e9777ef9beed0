#include "commat/arith.hpp"
#include "commat/errors.hpp"

#include <stdexcept>

namespace commat {

Rational f_q(const PrimePower& q, int n) {
    if (n < 0) throw std::invalid_argument("f_q: n must be >= 0");
    // prod (1 - q^-j) = prod (q^j - 1) / q^{n(n+1)/2}
    BigInt num(1);
    BigInt qj(1);
    for (int j = 1; j <= n; ++j) {
        qj *= q.q();
        num *= qj - 1;
    }
    const unsigned long tri = static_cast<unsigned long>(n) * (n + 1) / 2;
    Rational r(num, pow_int(q.q(), tri));
    r.canonicalize();
    return r;
}

BigInt gl_order(const PrimePower& q, int n) {
    if (n < 0) throw std::invalid_argument("gl_order: n must be >= 0");
    const unsigned long n2 = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
    Rational v = Rational(pow_int(q.q(), n2)) * f_q(q, n);
    return require_integer(v, "gl_order(q^{n^2} f_q(n))");
}

} // namespace commat
