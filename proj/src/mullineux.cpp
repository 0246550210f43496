#include "abacus/mullineux.hpp"

#include <algorithm>

namespace abacus {

LeadingBeads leading_beads(const BetaSet& b, int e) {
    require_valid(e > 2, "e must be > 2");

    auto greatest_bead_le = [&b](long long x) -> long long {
        if (x < b.floor()) return x; // inside the packed region
        const auto& beads = b.explicit_beads();
        auto it = std::upper_bound(beads.begin(), beads.end(), x);
        if (it != beads.begin()) return *(it - 1);
        return b.floor() - 1;
    };

    // Once the chain drops below the least empty space it steps by exactly e
    // forever, so b_i + i*e has stabilised.
    long long f0 = b.least_empty();
    std::vector<long long> chain{b.max_bead()};
    while (chain.back() >= f0) chain.push_back(greatest_bead_le(chain.back() - e));

    long long limit = chain.back() + static_cast<long long>(chain.size() - 1) * e;
    int z = 0;
    while (chain[static_cast<std::size_t>(z)] + static_cast<long long>(z) * e != limit) ++z;

    LeadingBeads out;
    out.stable_index = z;
    out.hat = limit;
    if (static_cast<int>(chain.size()) < z + 2) chain.push_back(chain.back() - e);
    chain.resize(static_cast<std::size_t>(z) + 2);
    out.prefix = std::move(chain);
    return out;
}

BetaSet ms_step(const BetaSet& b, int e) {
    LeadingBeads lead = leading_beads(b, e);
    int z = lead.stable_index;
    BeadWindow w = BeadWindow::of(b);
    // Finite form: remove b_0..b_z, insert b_0 - e .. b_{z-1} - e.
    for (int i = 0; i <= z; ++i) w.erase(lead.bead(i, e));
    for (int i = 0; i < z; ++i) w.insert(lead.bead(i, e) - e);
    BetaSet out = w.freeze();
    check_internal(!out.contains(lead.bead(z, e)), "b_z must leave the set");
    return out;
}

long long ms_bead(const BetaSet& b, int e) {
    return leading_beads(b, e).hat;
}

Partition proper_rim_removal_via_abacus(const BetaSet& b, int e) {
    LeadingBeads lead = leading_beads(b, e);
    BetaSet ms = ms_step(b, e);
    BeadWindow w = BeadWindow::of(ms);
    long long bz = lead.bead(lead.stable_index, e);
    if (bz < w.floor) w.extend_down(bz);
    w.insert(bz);
    return partition_of(w.freeze()).first;
}

namespace {

void require_regular(const Partition& lambda, int e) {
    require_valid(e > 2, "e must be > 2");
    require_pre(is_e_regular(lambda, e), "partition is not e-regular");
}

} // namespace

AmaTrace ama_trace(const Partition& lambda, int e, std::optional<int> d) {
    require_regular(lambda, e);
    if (d) validate_de(*d, e);

    AmaTrace trace{.steps = {},
                   .emitted = {},
                   .final_set = beta_set(Partition{}, 0),
                   .result = Partition{},
                   .combined_matrix = std::nullopt};
    BetaSet s = beta_set(lambda, 0);
    std::vector<long long> t;

    auto check_state = [&](const BetaSet& cur) -> std::optional<bool> {
        if (!d) return std::nullopt;
        CombinedPair pair(cur, t);
        bool ok = is_d_combined_pair(pair, *d, e);
        if (ok) {
            RunnerMatrix m = combined_runner_matrix(pair, *d, e);
            if (!trace.combined_matrix) trace.combined_matrix = m;
            else check_internal(*trace.combined_matrix == m,
                                "combined runner matrix changed along the trace");
        }
        return ok;
    };

    long long guard = lambda.size() + 2;
    while (true) {
        check_internal(guard-- >= 0, "abacus Mullineux algorithm failed to terminate");
        if (s.is_empty_partition()) {
            trace.steps.push_back(AmaStep{s, std::nullopt, check_state(s)});
            break;
        }
        long long hat = ms_bead(s, e);
        check_internal(t.empty() || hat < t.back(), "emitted beads must strictly decrease");
        trace.steps.push_back(AmaStep{s, hat, check_state(s)});
        trace.emitted.push_back(hat);
        t.push_back(hat);
        s = ms_step(s, e);
    }

    // T u S is disjoint at termination: every emitted bead lies above the
    // terminal packed region.
    check_internal(t.empty() || t.back() > s.max_bead(), "emitted beads must avoid the final S");
    BeadWindow w = BeadWindow::of(s);
    for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(*it);
    trace.final_set = w.freeze();
    auto [result, shift] = partition_of(trace.final_set);
    check_internal(shift == 0, "canonical start must give a canonical result");
    trace.result = result;
    return trace;
}

Partition ama(const Partition& lambda, int e) {
    require_regular(lambda, e);
    BetaSet s = beta_set(lambda, 0);
    std::vector<long long> t;
    long long guard = lambda.size() + 2;
    while (!s.is_empty_partition()) {
        check_internal(guard-- >= 0, "abacus Mullineux algorithm failed to terminate");
        long long hat = ms_bead(s, e);
        check_internal(t.empty() || hat < t.back(), "emitted beads must strictly decrease");
        t.push_back(hat);
        s = ms_step(s, e);
    }
    BeadWindow w = BeadWindow::of(s);
    for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(*it);
    auto [result, shift] = partition_of(w.freeze());
    check_internal(shift == 0, "canonical start must give a canonical result");
    return result;
}

Partition mullineux(const Partition& lambda, int e) {
    return conjugate(ama(lambda, e));
}

Partition xu_recursive(const Partition& lambda, int e) {
    require_regular(lambda, e);
    std::vector<int> parts;
    Partition cur = lambda;
    while (!cur.empty()) {
        Partition next = j_map(cur, e);
        check_internal(next.size() < cur.size(), "j_map must shrink an e-regular partition");
        parts.push_back(static_cast<int>(cur.size() - next.size()));
        cur = std::move(next);
    }
    return Partition(std::move(parts));
}

} // namespace abacus
