#ifndef COMMAT_BIGCOMPLEX_HPP
#define COMMAT_BIGCOMPLEX_HPP

#include <utility>

#include "commat/bigfloat.hpp"

namespace commat {

/// Arbitrary-precision complex value; precision lives in the two parts.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t prec = 128)
        : re(0.0, prec), im(0.0, prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex from_real(BigFloat r) {
        BigFloat zero(0.0, r.prec());
        return BigComplex(std::move(r), std::move(zero));
    }
    static BigComplex one(mpfr_prec_t prec) {
        return BigComplex(BigFloat(1L, prec), BigFloat(0L, prec));
    }

    BigComplex conj() const { return BigComplex(re, -im); }
    BigFloat abs() const { return BigFloat::hypot(re, im); }
    bool is_real_zero_im() const { return im.is_zero(); }
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re + b.re, a.im + b.im);
}

inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re - b.re, a.im - b.im);
}

inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

inline BigComplex operator*(const BigFloat& s, const BigComplex& z) {
    return BigComplex(s * z.re, s * z.im);
}

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const BigFloat d = b.re * b.re + b.im * b.im;
    return BigComplex((a.re * b.re + a.im * b.im) / d,
                      (a.im * b.re - a.re * b.im) / d);
}

} // namespace commat

#endif
