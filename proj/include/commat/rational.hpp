#ifndef COMMAT_RATIONAL_HPP
#define COMMAT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace commat {

// All exact counting flows through these two types. mpq_class keeps values
// canonicalized (lowest terms, positive denominator), which is exactly the
// ExactRational contract.
using BigInt = mpz_class;
using Rational = mpq_class;

/// b^e for integer base and non-negative exponent.
BigInt pow_int(const BigInt& base, unsigned long exp);

/// b^e with e possibly negative (result exact rational).
Rational pow_rational(const Rational& base, long exp);

/// True iff r has denominator 1.
bool is_integer(const Rational& r);

/// Numerator of an integral rational; throws InconsistencyError otherwise.
/// `context` names the identity being checked, for the error message.
BigInt require_integer(const Rational& r, const std::string& context);

/// "n/d" (or plain "n" when d = 1).
std::string to_string(const Rational& r);

/// Decimal expansion of r with `digits` digits after the point, correctly
/// rounded (half away from zero). Used for exact values in CLI records.
std::string decimal_string(const Rational& r, int digits);

} // namespace commat

#endif
