#include "commat/partitions.hpp"

namespace commat {

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

} // namespace commat
