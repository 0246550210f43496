#pragma once

#include <vector>

#include "abacus/partition.hpp"

namespace abacus {

// Streams the partitions of n in descending lexicographic order, starting at
// (n) and ending at (1^n). Constant memory; re-instantiable per worker.
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n);

    // nullptr once exhausted. The pointee is reused between calls.
    const std::vector<int>* next();

private:
    int n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> cur_;
};

template <class Fn>
void for_each_partition(int n, Fn&& fn) {
    PartitionGenerator gen(n);
    while (const std::vector<int>* p = gen.next()) fn(Partition(*p));
}

template <class Fn>
void for_each_e_regular(int n, int e, Fn&& fn) {
    PartitionGenerator gen(n);
    while (const std::vector<int>* p = gen.next()) {
        Partition lambda(*p);
        if (is_e_regular(lambda, e)) fn(lambda);
    }
}

// Partition count by the pentagonal-number recurrence; independent of the
// generator above.
long long partition_count(int n);

// Number of partitions streamed by the generator (for cross-checks).
long long streamed_count(int n);

} // namespace abacus
