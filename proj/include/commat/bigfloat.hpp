#ifndef COMMAT_BIGFLOAT_HPP
#define COMMAT_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "commat/rational.hpp"

namespace commat {

/// Working precision (bits) for a target of `digits` decimal digits with
/// guard digits on top: digits + 12 + extra_digits, converted to bits.
mpfr_prec_t prec_for_digits(int digits, int extra_digits = 0);

/// Value-semantic arbitrary-precision real. Every value carries its own
/// precision; binary operations round to the wider of the two operands.
/// Rounding is to nearest unless stated otherwise.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); }
    BigFloat(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigFloat(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigFloat(const BigInt& x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const Rational& x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 53);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
    BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat exp() const;
    BigFloat log() const;
    BigFloat log2() const;
    BigFloat pow_si(long e) const;
    BigFloat rootn(unsigned long k) const; // k-th root, correctly rounded

    static BigFloat pi(mpfr_prec_t prec);
    /// 10^e at the given precision (e may be negative); exact when
    /// representable, else correctly rounded.
    static BigFloat pow10(long e, mpfr_prec_t prec);
    /// sin and cos of `angle` in one call.
    static std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& angle);
    static BigFloat hypot(const BigFloat& x, const BigFloat& y);

    /// printf-style "%.*Rg" formatting with `digits` significant digits.
    std::string str(int digits) const;

private:
    mpfr_t v_;
};

// Directed-rounding helpers for rigorous magnitude bounds. All results are
// upper bounds (RNDU) at a fixed modest precision.
BigFloat add_up(const BigFloat& a, const BigFloat& b);
BigFloat mul_up(const BigFloat& a, const BigFloat& b);
BigFloat div_up(const BigFloat& a, const BigFloat& b);

} // namespace commat

#endif
