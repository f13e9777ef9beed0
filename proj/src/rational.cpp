#include "commat/rational.hpp"
#include "commat/errors.hpp"

namespace commat {

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    if (exp < 0) {
        if (r == 0) throw std::domain_error("pow_rational: negative power of zero");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) {
    return mpz_cmp_ui(mpq_denref(r.get_mpq_t()), 1) == 0;
}

BigInt require_integer(const Rational& r, const std::string& context) {
    if (!is_integer(r))
        throw InconsistencyError(context + ": expected an integer, got " + to_string(r));
    return r.get_num();
}

std::string to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimal_string(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    const bool neg = r < 0;
    Rational a = neg ? Rational(-r) : r;
    // scaled = round(a * 10^digits), half away from zero
    BigInt scale = pow_int(BigInt(10), static_cast<unsigned long>(digits));
    BigInt num = a.get_num() * scale;
    BigInt den = a.get_den();
    BigInt q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem * 2 >= den) q += 1;
    std::string s = q.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, std::string(static_cast<size_t>(digits) + 1 - s.size(), '0'));
        s.insert(s.size() - static_cast<size_t>(digits), ".");
    }
    return neg && q != 0 ? "-" + s : s;
}

} // namespace commat
