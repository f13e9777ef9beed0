#ifndef COMMAT_PARTITIONS_HPP
#define COMMAT_PARTITIONS_HPP

#include <algorithm>
#include <vector>
#include <utility>

namespace commat {

/// An integer partition of n in frequency form: freq[k-1] = b_k = number of
/// parts equal to k, with sum k*b_k = n. freq has length n (empty for n = 0).
struct Partition {
    int n = 0;
    std::vector<unsigned> freq;

    /// Number of parts, sum of the b_k.
    unsigned long part_count() const {
        unsigned long c = 0;
        for (unsigned b : freq) c += b;
        return c;
    }

    /// (part size, multiplicity) pairs for the nonzero frequencies,
    /// increasing part size.
    std::vector<std::pair<int, unsigned>> nonzero() const {
        std::vector<std::pair<int, unsigned>> v;
        for (int k = 1; k <= n; ++k)
            if (freq[static_cast<size_t>(k) - 1] > 0)
                v.emplace_back(k, freq[static_cast<size_t>(k) - 1]);
        return v;
    }
};

/// Visits every partition of n exactly once, largest part lexicographically
/// decreasing: [n], [n-1,1], ..., [1,...,1]. For n = 0 visits the empty
/// partition once.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    Partition part;
    part.n = n;
    part.freq.assign(static_cast<size_t>(n), 0u);
    // rec(rem, maxpart): append parts <= maxpart summing to rem
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            fn(const_cast<const Partition&>(part));
            return;
        }
        for (int k = std::min(rem, maxpart); k >= 1; --k) {
            ++part.freq[static_cast<size_t>(k) - 1];
            self(self, rem - k, k);
            --part.freq[static_cast<size_t>(k) - 1];
        }
    };
    rec(rec, n, n);
}

/// All partitions of n, materialized in the same order.
std::vector<Partition> partitions(int n);

} // namespace commat

#endif
