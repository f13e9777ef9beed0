#include "commat/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace commat {

namespace {
constexpr mpfr_prec_t kBoundPrec = 96;
}

mpfr_prec_t prec_for_digits(int digits, int extra_digits) {
    const double bits = (digits + 12 + extra_digits) * 3.3219280948873626;
    return std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(bits) + 2);
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    BigFloat r(prec());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log2() const {
    BigFloat r(prec());
    mpfr_log2(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_si(long e) const {
    BigFloat r(prec());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::rootn(unsigned long k) const {
    BigFloat r(prec());
    mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow10(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

std::pair<BigFloat, BigFloat> BigFloat::sin_cos(const BigFloat& angle) {
    BigFloat s(angle.prec()), c(angle.prec());
    mpfr_sin_cos(s.v_, c.v_, angle.v_, MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

BigFloat BigFloat::hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(std::max(x.prec(), y.prec()));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat add_up(const BigFloat& a, const BigFloat& b) {
    BigFloat r(kBoundPrec);
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}

BigFloat mul_up(const BigFloat& a, const BigFloat& b) {
    BigFloat r(kBoundPrec);
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}

BigFloat div_up(const BigFloat& a, const BigFloat& b) {
    BigFloat r(kBoundPrec);
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}

} // namespace commat
