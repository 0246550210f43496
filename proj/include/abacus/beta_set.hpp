#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "abacus/partition.hpp"

namespace abacus {

// Windowed representation of a beta-set on the James abacus. Every integer
// below `floor` is implicitly a bead; the finitely many beads at or above the
// floor are listed explicitly, in ascending order. The shift s with
// set == B_s(partition) is derived from the content and cached.
class BetaSet {
public:
    BetaSet(long long floor, std::vector<long long> explicit_beads);

    long long floor() const { return floor_; }
    const std::vector<long long>& explicit_beads() const { return beads_; }
    long long shift() const { return shift_; }

    bool contains(long long v) const;
    long long max_bead() const; // floor - 1 when no explicit bead
    // Least empty space; every integer below it is a bead.
    long long least_empty() const;
    bool is_empty_partition() const;

    // Same set, floor lowered to new_floor (implicit beads materialised).
    BetaSet rewindowed(long long new_floor) const;
    // Same set, floor raised to the least empty space.
    BetaSet normalized() const;
    // Window-independent set equality.
    bool same_set(const BetaSet& other) const;

    // Beads / empty spaces in [u, v]; requires u <= v + 1.
    long long bd(long long u, long long v) const;
    long long emp_range(long long u, long long v) const;
    // Emptiness of v: empty spaces <= v. Anchored at the floor, below which
    // there are no empty spaces.
    long long emp(long long v) const;

private:
    long long floor_ = 0;
    std::vector<long long> beads_;
    long long shift_ = 0;
};

BetaSet beta_set(const Partition& lambda, long long s);
std::pair<Partition, long long> partition_of(const BetaSet& b);

// |underlying partition|, computed both as the sum of bead emptinesses and
// by the bead-position formula; the two must agree.
long long size_of(const BetaSet& b);

struct CoreWeight {
    Partition core;
    long long weight = 0;
    BetaSet slid; // all beads slid fully up on their runners; same shift
};
CoreWeight e_core_weight(const BetaSet& b, int e);

// True iff the underlying partitions have equal e-cores. Both sets must carry
// the same shift; decided by per-runner bead counts above a common floor.
bool same_core(const BetaSet& b1, const BetaSet& b2, int e);

// Mutable scratch window for the bead-moving algorithms.
struct BeadWindow {
    long long floor = 0;
    std::vector<long long> beads; // ascending, all >= floor

    static BeadWindow of(const BetaSet& b);
    bool contains(long long v) const;
    void extend_down(long long new_floor);
    void insert(long long v);
    void erase(long long v);
    BetaSet freeze() const;
};

} // namespace abacus
