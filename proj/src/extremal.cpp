#include "abacus/extremal.hpp"

#include <algorithm>
#include <map>

#include "abacus/enumerate.hpp"
#include "abacus/hook_classes.hpp"

namespace abacus {

std::vector<long long> SwapLog::up_steps() const {
    std::vector<long long> out;
    for (const auto& s : swaps)
        if (s.kind == MoveKind::Up) out.push_back(s.step);
    return out;
}

std::vector<long long> SwapLog::down_steps() const {
    std::vector<long long> out;
    for (const auto& s : swaps)
        if (s.kind == MoveKind::Down) out.push_back(s.step);
    return out;
}

namespace {

MoveKind apply_swap(BeadWindow& w, long long lo, long long hi) {
    if (lo < w.floor) w.extend_down(lo);
    bool in_lo = w.contains(lo), in_hi = w.contains(hi);
    if (in_lo == in_hi) return MoveKind::Neutral;
    if (in_hi) {
        w.erase(hi);
        w.insert(lo);
        return MoveKind::Up;
    }
    w.erase(lo);
    w.insert(hi);
    return MoveKind::Down;
}

void validate_swap_inputs(const BetaSet& b, long long bead, long long a, int d, int e) {
    validate_de(d, e);
    require_pre(a > 0, "a must be positive");
    require_pre(b.contains(bead), "b is not a bead");
    require_pre(!b.contains(bead - a * e), "b - ae is not an empty space");
}

} // namespace

std::pair<BetaSet, SwapLog> a1(const BetaSet& b, long long bead, long long a, int d, int e,
                               long long swap_cap) {
    validate_swap_inputs(b, bead, a, d, e);
    const long long ae = a * e;
    SwapLog log;
    BeadWindow w = BeadWindow::of(b);

    if (b.bd(bead - ae, bead - 1) == 0) {
        MoveKind kind = apply_swap(w, bead - ae, bead);
        check_internal(kind == MoveKind::Up, "short-circuit swap must be an up-move");
        log.swaps.push_back({0, bead - ae, bead, kind});
        log.ups = 1;
        log.terminal_index = 0;
        log.short_circuit = true;
        return {w.freeze(), std::move(log)};
    }

    for (long long i = 0;; ++i) {
        require_pre(i < swap_cap, "swap cap exceeded");
        MoveKind kind = apply_swap(w, bead + i - ae, bead + i);
        log.swaps.push_back({i, bead + i - ae, bead + i, kind});
        if (kind == MoveKind::Up) ++log.ups;
        if (kind == MoveKind::Down) ++log.downs;
        if ((log.ups - log.downs) % d == 0) {
            log.terminal_index = i;
            break;
        }
    }
    check_internal(log.ups - log.downs == 0 || log.ups - log.downs == d,
                   "up-moves must equal down-moves or exceed them by d");
    return {w.freeze(), std::move(log)};
}

std::pair<BetaSet, SwapLog> a2(const BetaSet& b, long long bead, long long a, int d, int e,
                               long long swap_cap) {
    validate_swap_inputs(b, bead, a, d, e);
    require_pre(runner_matrix_of_beta_set(b, d, e).zero_in_every_row(),
                "every row of the d-runner matrix must contain a zero");
    const long long ae = a * e;
    SwapLog log;
    BeadWindow w = BeadWindow::of(b);

    for (long long i = 0;; ++i) {
        require_pre(i < swap_cap, "swap cap exceeded");
        MoveKind kind = apply_swap(w, bead - i - ae, bead - i);
        log.swaps.push_back({i, bead - i - ae, bead - i, kind});
        if (kind == MoveKind::Up) ++log.ups;
        if (kind == MoveKind::Down) ++log.downs;
        if ((log.ups - log.downs) % d == 0) {
            log.terminal_index = i;
            break;
        }
    }
    check_internal(log.ups - log.downs == 0 || log.ups - log.downs == d,
                   "up-moves must equal down-moves or exceed them by d");
    return {w.freeze(), std::move(log)};
}

BetaSet replay_runner_wise(const BetaSet& b, const SwapLog& log, long long ae) {
    BeadWindow w = BeadWindow::of(b);
    for (long long r = 0; r < ae; ++r) {
        for (const auto& s : log.swaps) {
            if (((s.step % ae) + ae) % ae == r) apply_swap(w, s.lo, s.hi);
        }
    }
    return w.freeze();
}

BetaSet a1_interval_image(const BetaSet& b, long long bead, long long a, int e,
                          const SwapLog& log) {
    check_internal(!log.short_circuit, "interval image applies to the loop branch only");
    const long long ae = a * e;
    const long long t = log.terminal_index;
    const long long rt = t % ae;
    // The permutation is the identity below bead - ae, so implicit beads and
    // the floor are untouched. bead - ae itself is an empty space >= floor.
    std::vector<long long> beads;
    for (long long v : b.explicit_beads()) {
        if (v < bead - ae) beads.push_back(v);
        else if (v <= bead + rt - ae) beads.push_back(v + ae + t - rt);
        else if (v < bead) beads.push_back(v + t - rt);
        else if (v <= bead + t) beads.push_back(v - ae);
        else beads.push_back(v);
    }
    return BetaSet(b.floor(), std::move(beads));
}

Partition greedy_max(const Partition& gamma, const RunnerMatrix& matrix) {
    const int d = matrix.d, e = matrix.e;
    validate_de(d, e);
    {
        auto hooks = e_divisible_hooks(gamma, e);
        require_pre(hooks.empty(), "gamma must be an e-core");
    }
    const long long n = matrix.total();
    BetaSet core = beta_set(gamma, 0);
    // Window low enough that every position below l + eN is a bead.
    long long l = core.least_empty() - e * n - 1;
    BetaSet wide = core.rewindowed(std::min(l, core.floor()));

    // Extend the matrix with a row x = 0 absorbing the beads at or above l
    // that keep d-emptiness 0.
    std::vector<long long> per_runner(static_cast<std::size_t>(e), 0);
    for (long long bead : wide.explicit_beads())
        if (bead >= l) ++per_runner[static_cast<std::size_t>(((bead % e) + e) % e)];
    std::vector<std::vector<long long>> quota(static_cast<std::size_t>(d),
                                              std::vector<long long>(static_cast<std::size_t>(e), 0));
    for (int y = 0; y < e; ++y) {
        long long used = 0;
        for (int x = 1; x < d; ++x) {
            quota[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = matrix.at(x, y);
            used += matrix.at(x, y);
        }
        check_internal(per_runner[static_cast<std::size_t>(y)] >= used,
                       "window too small for the requested matrix");
        quota[0][static_cast<std::size_t>(y)] = per_runner[static_cast<std::size_t>(y)] - used;
    }

    // Fill positions l, l+1, ... greedily: a position is taken when its
    // runner still owes a bead of the d-emptiness the position would get.
    long long remaining = 0;
    for (const auto& row : quota)
        for (long long q : row) remaining += q;
    std::vector<long long> beads;
    for (long long v = l - 1; v >= wide.floor(); --v) beads.push_back(v);
    std::reverse(beads.begin(), beads.end());
    long long emptiness = 0; // emptiness of v - 1 in the set under construction
    for (long long v = l; remaining > 0; ++v) {
        check_internal(v - l < 10'000'000, "greedy fill failed to place all beads");
        int y = static_cast<int>(((v % e) + e) % e);
        int x = static_cast<int>(emptiness % d);
        auto& q = quota[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        if (q > 0) {
            --q;
            --remaining;
            beads.push_back(v);
        } else {
            ++emptiness;
        }
    }
    BetaSet built(wide.floor(), std::move(beads));
    auto [lambda, shift] = partition_of(built);
    check_internal(shift == 0, "greedy construction must stay canonical");
    return lambda;
}

namespace {

// Dominance-extreme member; asserts uniqueness.
Partition dominance_extreme(const std::vector<Partition>& members, bool want_max) {
    std::optional<Partition> found;
    for (const auto& cand : members) {
        bool extreme = true;
        for (const auto& other : members) {
            OrderRelation rel = dominance(cand, other);
            if (rel == OrderRelation::Equal) continue;
            if (want_max && rel != OrderRelation::Greater) extreme = false;
            if (!want_max && rel != OrderRelation::Less) extreme = false;
            if (!extreme) break;
        }
        if (extreme) {
            check_internal(!found.has_value(), "dominance extreme is not unique");
            found = cand;
        }
    }
    check_internal(found.has_value(), "family has no dominance extreme");
    return *found;
}

} // namespace

FamilyResult min_weight_and_family(const Partition& gamma, const RunnerMatrix& matrix) {
    const int d = matrix.d, e = matrix.e;
    Partition ceiling = greedy_max(gamma, matrix);
    long long w_upper = (ceiling.size() - gamma.size()) / e;
    check_internal(gamma.size() + w_upper * e == ceiling.size(), "weight bound must be integral");

    for (long long w = 0; w <= w_upper; ++w) {
        std::vector<Partition> members;
        for_each_partition(static_cast<int>(gamma.size() + w * e), [&](const Partition& cand) {
            if (runner_matrix_of_partition(cand, d, e) != matrix) return;
            if (e_core_weight(beta_set(cand, 0), e).core != gamma) return;
            members.push_back(cand);
        });
        if (members.empty()) continue;
        std::sort(members.begin(), members.end(), lex_greater);
        FamilyResult out{gamma, matrix, w, members, dominance_extreme(members, true),
                         std::nullopt};
        if (matrix.zero_in_every_row()) out.min_elem = dominance_extreme(members, false);
        return out;
    }
    throw internal_error("greedy construction bounds the minimal weight");
}

namespace {

// First witness (bead, a) scanning beads descending and a ascending; the
// balanced form tests emp(b-ae, b), the skewed form emp(b-ae+1, b).
std::optional<std::pair<long long, long long>> find_witness(const BetaSet& b, int d, int e,
                                                            bool shifted_form) {
    const auto& beads = b.explicit_beads();
    for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
        for (long long v = *it - e; v >= b.floor(); v -= e) {
            if (b.contains(v)) continue;
            long long emp = shifted_form ? b.emp_range(v, *it) : b.emp_range(v + 1, *it);
            if (emp % d == 0) return std::make_pair(*it, (*it - v) / e);
        }
    }
    return std::nullopt;
}

} // namespace

Partition maximize(const Partition& lambda, int d, int e) {
    validate_de(d, e);
    BetaSet b = beta_set(lambda, 0);
    long long guard = 0;
    while (auto witness = find_witness(b, d, e, /*shifted_form=*/true)) {
        check_internal(++guard < 100000, "maximize failed to reach a fixed point");
        b = a1(b, witness->first, witness->second, d, e).first.normalized();
    }
    return partition_of(b).first;
}

Partition minimize(const Partition& lambda, int d, int e) {
    validate_de(d, e);
    require_pre(runner_matrix_of_partition(lambda, d, e).zero_in_every_row(),
                "every row of the d-runner matrix must contain a zero");
    BetaSet b = beta_set(lambda, 0);
    long long guard = 0;
    while (auto witness = find_witness(b, d, e, /*shifted_form=*/false)) {
        check_internal(++guard < 100000, "minimize failed to reach a fixed point");
        b = a2(b, witness->first, witness->second, d, e).first.normalized();
    }
    return partition_of(b).first;
}

bool no_skewed_exists(const RunnerMatrix& matrix, long long bound) {
    require_pre(matrix.has_all_positive_row(), "matrix needs an all-positive row");
    for (int n = 0; n <= bound; ++n) {
        bool found = false;
        for_each_partition(n, [&](const Partition& cand) {
            if (found) return;
            if (runner_matrix_of_partition(cand, matrix.d, matrix.e) != matrix) return;
            if (classify_partition(cand, matrix.d, matrix.e).skewed) found = true;
        });
        if (found) return false;
    }
    return true;
}

} // namespace abacus
