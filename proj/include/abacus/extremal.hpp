#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abacus/beta_set.hpp"
#include "abacus/partition.hpp"
#include "abacus/runner_matrix.hpp"

namespace abacus {

enum class MoveKind { Up, Down, Neutral };

struct Swap {
    long long step = 0; // the loop index i
    long long lo = 0;
    long long hi = 0;
    MoveKind kind = MoveKind::Neutral;
};

struct SwapLog {
    std::vector<Swap> swaps;
    long long terminal_index = 0; // step of the last swap
    long long ups = 0;
    long long downs = 0;
    bool short_circuit = false; // single-swap branch of the first algorithm

    std::vector<long long> up_steps() const;
    std::vector<long long> down_steps() const;
};

inline constexpr long long kDefaultSwapCap = 1'000'000;

// Upward swap cascade: starting from bead b over the empty space b - ae,
// swap (b + i - ae, b + i) for i = 0, 1, 2, ... until the numbers of up- and
// down-moves agree mod d. When no bead lies in [b - ae, b - 1] the result is
// the single swap. Preserves the e-core; the underlying partition either
// shrinks or grows in the dominance order.
std::pair<BetaSet, SwapLog> a1(const BetaSet& b, long long bead, long long a, int d, int e,
                               long long swap_cap = kDefaultSwapCap);

// Downward swap cascade: swap (b - i - ae, b - i) for i = 0, 1, 2, ...
// Requires every row of the d-runner matrix of B to contain a zero (the
// termination guard). The underlying partition either shrinks or drops in
// the dominance order.
std::pair<BetaSet, SwapLog> a2(const BetaSet& b, long long bead, long long a, int d, int e,
                               long long swap_cap = kDefaultSwapCap);

// Replays the recorded swaps grouped runner-wise on the abacus with ae
// runners (group = step mod ae, original order inside each group).
BetaSet replay_runner_wise(const BetaSet& b, const SwapLog& log, long long ae);

// Closed-form image of the first cascade: the three intervals around b are
// translated as one block each. Valid for the loop branch only.
BetaSet a1_interval_image(const BetaSet& b, long long bead, long long a, int e,
                          const SwapLog& log);

// Builds the dominance-greatest partition with the given e-core and d-runner
// matrix by greedily filling positions above a packed window.
Partition greedy_max(const Partition& gamma, const RunnerMatrix& matrix);

struct FamilyResult {
    Partition gamma;
    RunnerMatrix matrix;
    long long w = 0;                  // minimal e-weight realising the pair
    std::vector<Partition> members;   // descending lexicographic order
    Partition max_elem;
    std::optional<Partition> min_elem; // present when every matrix row has a 0
};

FamilyResult min_weight_and_family(const Partition& gamma, const RunnerMatrix& matrix);

// Repeated a1 at any witness (bead b, gap b - ae) with d | emp(b - ae, b);
// the fixed point is the unique d-shift-skewed partition with the same
// e-core and d-runner matrix.
Partition maximize(const Partition& lambda, int d, int e);

// Dual procedure with a2 at witnesses with d | emp(b - ae + 1, b); requires
// every row of the d-runner matrix to contain a zero.
Partition minimize(const Partition& lambda, int d, int e);

// Exhaustively confirms, up to `bound`, that no d-skewed partition has the
// given matrix. Requires the matrix to have an all-positive row.
bool no_skewed_exists(const RunnerMatrix& matrix, long long bound);

} // namespace abacus
