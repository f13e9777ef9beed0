#ifndef COMMAT_BRUTE_HPP
#define COMMAT_BRUTE_HPP

#include <cstdint>

#include "commat/matrix_fp.hpp"
#include "commat/rational.hpp"

namespace commat {

/// Work budget for the enumeration kernels, counted in field
/// multiplications. Refusals are all-or-nothing: no partial counts.
inline constexpr std::uint64_t kDefaultBruteBudget = 1'000'000'000ull;

/// Estimated field multiplications for each scan (used for the budget gate).
BigInt brute_cost_commuting_pairs(int p, int n);
BigInt brute_cost_nilpotent(int p, int n);
BigInt brute_cost_commuting_nilpotent_pairs(int p, int n);

/// Exhaustive count of ordered pairs (A,B), AB = BA, over F_p.
/// Throws BudgetError when the scan would exceed `budget` multiplications.
BigInt count_commuting_pairs(int p, int n, std::uint64_t budget = kDefaultBruteBudget);

/// Exhaustive count of nilpotent matrices. Asserts trace = det = 0 for
/// every nilpotent matrix found (throws InconsistencyError otherwise).
BigInt count_nilpotent(int p, int n, std::uint64_t budget = kDefaultBruteBudget);

/// Exhaustive count of ordered pairs of commuting nilpotent matrices.
BigInt count_commuting_nilpotent_pairs(int p, int n, std::uint64_t budget = kDefaultBruteBudget);

} // namespace commat

#endif
