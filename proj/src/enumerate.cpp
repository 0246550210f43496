#include "abacus/enumerate.hpp"

namespace abacus {

PartitionGenerator::PartitionGenerator(int n) : n_(n) {
    require_valid(n >= 0, "n must be non-negative");
}

const std::vector<int>* PartitionGenerator::next() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        cur_.clear();
        if (n_ > 0) cur_.push_back(n_);
        return &cur_;
    }
    // Successor in descending lexicographic order: shrink the last part
    // larger than one, then repack the freed cells as large as allowed.
    int k = static_cast<int>(cur_.size()) - 1;
    while (k >= 0 && cur_[static_cast<std::size_t>(k)] == 1) --k;
    if (k < 0) {
        done_ = true;
        return nullptr;
    }
    int freed = static_cast<int>(cur_.size()) - 1 - k + cur_[static_cast<std::size_t>(k)];
    int m = cur_[static_cast<std::size_t>(k)] - 1;
    cur_.resize(static_cast<std::size_t>(k));
    while (freed > 0) {
        int part = std::min(freed, m);
        cur_.push_back(part);
        freed -= part;
    }
    return &cur_;
}

long long partition_count(int n) {
    require_valid(n >= 0, "n must be non-negative");
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

long long streamed_count(int n) {
    long long count = 0;
    for_each_partition(n, [&count](const Partition&) { ++count; });
    return count;
}

} // namespace abacus
