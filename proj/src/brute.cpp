#include "commat/brute.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "commat/errors.hpp"
#include "commat/prime_power.hpp"

namespace commat {

namespace {

void check_field(int p, int n) {
    if (n < 0) throw std::invalid_argument("brute: n must be >= 0");
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("brute: p = " + std::to_string(p) +
                                    " is not prime (prime fields only)");
}

BigInt matrix_space(int p, int n) {
    return pow_int(BigInt(p), static_cast<unsigned long>(n) * n);
}

void require_budget(const BigInt& cost, std::uint64_t budget, const char* what) {
    if (cost > BigInt(static_cast<unsigned long>(budget)))
        throw BudgetError(std::string(what) + ": estimated " + cost.get_str() +
                          " field multiplications exceeds budget " + std::to_string(budget));
}

// AB == BA with early exit, entry by entry.
bool commute(const MatrixFp& a, const MatrixFp& b) {
    const int n = a.n;
    const std::int64_t p = a.p;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t ab = 0, ba = 0;
            for (int k = 0; k < n; ++k) {
                ab += static_cast<std::int64_t>(a.at(i, k)) * b.at(k, j);
                ba += static_cast<std::int64_t>(b.at(i, k)) * a.at(k, j);
            }
            if (ab % p != ba % p) return false;
        }
    return true;
}

std::vector<MatrixFp> all_matrices(int p, int n) {
    const BigInt total = matrix_space(p, n);
    std::vector<MatrixFp> v;
    v.reserve(total.get_ui());
    const std::uint64_t count = total.get_ui();
    for (std::uint64_t idx = 0; idx < count; ++idx)
        v.push_back(MatrixFp::from_index(n, p, idx));
    return v;
}

} // namespace

BigInt brute_cost_commuting_pairs(int p, int n) {
    const BigInt m = matrix_space(p, n);
    return m * m * (2 * static_cast<long>(n) * n * n);
}

BigInt brute_cost_nilpotent(int p, int n) {
    const long mults = static_cast<long>(n > 1 ? n - 1 : 1) * n * n * n;
    return matrix_space(p, n) * mults;
}

BigInt brute_cost_commuting_nilpotent_pairs(int p, int n) {
    // The nilpotent scan plus the pair scan over the p^{n^2-n} survivors
    // (that count is only a cost estimate; the scan itself assumes nothing).
    const BigInt nilp = pow_int(BigInt(p), static_cast<unsigned long>(n) * n - n);
    return brute_cost_nilpotent(p, n) + nilp * nilp * (2 * static_cast<long>(n) * n * n);
}

BigInt count_commuting_pairs(int p, int n, std::uint64_t budget) {
    check_field(p, n);
    if (n == 0) return 1;
    require_budget(brute_cost_commuting_pairs(p, n), budget, "count_commuting_pairs");
    const auto mats = all_matrices(p, n);
    BigInt count(0);
    for (const auto& a : mats) {
        unsigned long row = 0;
        for (const auto& b : mats)
            if (commute(a, b)) ++row;
        count += row;
    }
    return count;
}

BigInt count_nilpotent(int p, int n, std::uint64_t budget) {
    check_field(p, n);
    if (n == 0) return 1;
    require_budget(brute_cost_nilpotent(p, n), budget, "count_nilpotent");
    const std::uint64_t total = matrix_space(p, n).get_ui();
    BigInt count(0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const MatrixFp a = MatrixFp::from_index(n, p, idx);
        if (is_nilpotent(a)) {
            if (trace_fp(a) != 0 || det_fp(a) != 0)
                throw InconsistencyError("count_nilpotent: nilpotent matrix with "
                                         "nonzero trace or determinant");
            count += 1;
        }
    }
    return count;
}

BigInt count_commuting_nilpotent_pairs(int p, int n, std::uint64_t budget) {
    check_field(p, n);
    if (n == 0) return 1;
    require_budget(brute_cost_commuting_nilpotent_pairs(p, n), budget,
                   "count_commuting_nilpotent_pairs");
    const std::uint64_t total = matrix_space(p, n).get_ui();
    std::vector<MatrixFp> nilp;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        MatrixFp a = MatrixFp::from_index(n, p, idx);
        if (is_nilpotent(a)) nilp.push_back(std::move(a));
    }
    BigInt count(0);
    for (const auto& a : nilp) {
        unsigned long row = 0;
        for (const auto& b : nilp)
            if (commute(a, b)) ++row;
        count += row;
    }
    return count;
}

} // namespace commat
