#ifndef COMMAT_MATRIX_FP_HPP
#define COMMAT_MATRIX_FP_HPP

#include <cstdint>
#include <vector>

namespace commat {

/// Dense n x n matrix over the prime field F_p, entries reduced mod p.
struct MatrixFp {
    int n = 0;
    int p = 2;
    std::vector<std::int32_t> e; // row-major, size n*n

    MatrixFp() = default;
    MatrixFp(int n_, int p_) : n(n_), p(p_), e(static_cast<size_t>(n_) * n_, 0) {}

    std::int32_t& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    std::int32_t at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

    static MatrixFp zero(int n, int p) { return MatrixFp(n, p); }
    static MatrixFp identity(int n, int p);

    /// Matrix with index `idx` in the enumeration order: entries are the
    /// base-p digits of idx, least significant digit first, row-major
    /// (entry (0,0) is the lowest digit).
    static MatrixFp from_index(int n, int p, std::uint64_t idx);

    bool is_zero() const;
    bool operator==(const MatrixFp& o) const { return n == o.n && p == o.p && e == o.e; }
};

/// Exact product mod p; throws std::invalid_argument on dimension or
/// modulus mismatch.
MatrixFp mat_mul(const MatrixFp& a, const MatrixFp& b);

/// a^n == 0 (Cayley-Hamilton bounds the nilpotence index by n).
bool is_nilpotent(const MatrixFp& a);

std::int32_t trace_fp(const MatrixFp& a);
std::int32_t det_fp(const MatrixFp& a); // Gaussian elimination mod p

} // namespace commat

#endif
