#pragma once

#include <optional>
#include <vector>

#include "abacus/beta_set.hpp"
#include "abacus/partition.hpp"
#include "abacus/runner_matrix.hpp"

namespace abacus {

// The greedy chain b_0 > b_1 > ... with b_0 = max B and b_{i+1} the greatest
// bead <= b_i - e. The sequence b_i + i*e is non-increasing; z is the least
// index from which it is constant, and hat = b_z + z*e.
struct LeadingBeads {
    std::vector<long long> prefix; // b_0 .. b_{z+1}
    int stable_index = 0;          // z
    long long hat = 0;             // = b_z + z*e

    // b_i for any i >= 0; beyond the prefix the chain descends by e.
    long long bead(int i, int e) const {
        if (i < static_cast<int>(prefix.size())) return prefix[static_cast<std::size_t>(i)];
        return hat - static_cast<long long>(i) * e;
    }
};

LeadingBeads leading_beads(const BetaSet& b, int e);

// Replace every leading bead b_i by b_i - e. One step of the abacus
// Mullineux algorithm; produces a beta-set of j_map of the underlying
// partition.
BetaSet ms_step(const BetaSet& b, int e);

// The emitted bead hat = b_z + z*e.
long long ms_bead(const BetaSet& b, int e);

// Partition left after removing the proper e-rim, computed on the abacus as
// the partition of ms_step(B) with the bead b_z put back.
Partition proper_rim_removal_via_abacus(const BetaSet& b, int e);

struct AmaStep {
    BetaSet s;
    std::optional<long long> emitted;           // absent on the terminal state
    std::optional<bool> combined_pair_ok;       // filled when d is supplied
};

struct AmaTrace {
    std::vector<AmaStep> steps;   // initial state first, terminal state last
    std::vector<long long> emitted;
    BetaSet final_set;            // T together with the terminal S
    Partition result;             // m_e(lambda)'
    std::optional<RunnerMatrix> combined_matrix; // constant along the trace when d given
};

// Mullineux-conjugate m_e(lambda)'; requires lambda e-regular.
Partition ama(const Partition& lambda, int e);

// The Mullineux image m_e(lambda) = conjugate(ama(lambda, e)).
Partition mullineux(const Partition& lambda, int e);

// Independent route: iterate j_map on the Young diagram, reading off
// |lambda| - |j_map(lambda)| as the next part of m_e(lambda)'.
Partition xu_recursive(const Partition& lambda, int e);

// Full run with per-step state capture; when d is supplied every (S, T)
// state is checked to be a d-combined pair and the combined runner matrix is
// required to stay constant.
AmaTrace ama_trace(const Partition& lambda, int e, std::optional<int> d = std::nullopt);

} // namespace abacus
