#include "commat/matrix_fp.hpp"

#include <stdexcept>

namespace commat {

namespace {

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

} // namespace

MatrixFp MatrixFp::identity(int n, int p) {
    MatrixFp m(n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

MatrixFp MatrixFp::from_index(int n, int p, std::uint64_t idx) {
    MatrixFp m(n, p);
    for (auto& v : m.e) {
        v = static_cast<std::int32_t>(idx % static_cast<std::uint64_t>(p));
        idx /= static_cast<std::uint64_t>(p);
    }
    return m;
}

bool MatrixFp::is_zero() const {
    for (auto v : e)
        if (v != 0) return false;
    return true;
}

MatrixFp mat_mul(const MatrixFp& a, const MatrixFp& b) {
    if (a.n != b.n || a.p != b.p)
        throw std::invalid_argument("mat_mul: dimension or modulus mismatch");
    const int n = a.n;
    MatrixFp c(n, a.p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < n; ++k)
                s += static_cast<std::int64_t>(a.at(i, k)) * b.at(k, j);
            c.at(i, j) = static_cast<std::int32_t>(s % a.p);
        }
    return c;
}

bool is_nilpotent(const MatrixFp& a) {
    if (a.n == 0) return true;
    MatrixFp x = a;
    for (int k = 1; k < a.n; ++k) {
        if (x.is_zero()) return true;
        x = mat_mul(x, a);
    }
    return x.is_zero();
}

std::int32_t trace_fp(const MatrixFp& a) {
    std::int64_t s = 0;
    for (int i = 0; i < a.n; ++i) s += a.at(i, i);
    return static_cast<std::int32_t>(s % a.p);
}

std::int32_t det_fp(const MatrixFp& a) {
    const int n = a.n;
    const std::int64_t p = a.p;
    if (n == 0) return 1 % a.p;
    MatrixFp m = a;
    std::int64_t det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m.at(row, col) != 0) { pivot = row; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = p - det % p;
        }
        det = det % p * m.at(col, col) % p;
        const std::int64_t inv = powmod(m.at(col, col), p - 2, p);
        for (int row = col + 1; row < n; ++row) {
            const std::int64_t factor = m.at(row, col) * inv % p;
            if (factor == 0) continue;
            for (int j = col; j < n; ++j) {
                std::int64_t v = m.at(row, j) - factor * m.at(col, j) % p;
                m.at(row, j) = static_cast<std::int32_t>((v % p + p) % p);
            }
        }
    }
    return static_cast<std::int32_t>(det % p);
}

} // namespace commat
