#pragma once

#include <optional>

#include "abacus/beta_set.hpp"
#include "abacus/partition.hpp"
#include "abacus/runner_matrix.hpp"

namespace abacus {

// Witness for a failed class predicate. The partition route stores the
// offending hook anchor in (x, y) = (i, j); the beta-set route stores
// (x, y) = (b, a) for the bead b and gap b - ae. `arm` is the hook arm
// length, i.e. emp(b - ae + 1, b) on the abacus side.
struct HookClassWitness {
    long long x = 0;
    long long y = 0;
    long long arm = 0;
};

// The four arm-length classes, decided over every e-divisible hook:
// balanced        arm = 0 (mod d)      shift_balanced  arm = -1 (mod d)
// skewed          arm != 0 (mod d)     shift_skewed    arm != -1 (mod d)
// A partition with no e-divisible hooks lies in all four classes.
struct HookClassReport {
    bool balanced = true;
    bool shift_balanced = true;
    bool skewed = true;
    bool shift_skewed = true;
    std::optional<HookClassWitness> balanced_witness;
    std::optional<HookClassWitness> shift_balanced_witness;
    std::optional<HookClassWitness> skewed_witness;
    std::optional<HookClassWitness> shift_skewed_witness;
};

HookClassReport classify_partition(const Partition& lambda, int d, int e);
HookClassReport classify_beta_set(const BetaSet& b, int d, int e);

// Regularity gate for the Mullineux pipeline: errors unless lambda is
// d-balanced, then reports e-regularity.
bool regularity_from_balance(const Partition& lambda, int d, int e);

} // namespace abacus
