#include "abacus/hook_classes.hpp"

namespace abacus {

namespace {

void apply_arm(HookClassReport& r, long long arm, int d, long long x, long long y) {
    long long rem = ((arm % d) + d) % d;
    HookClassWitness w{x, y, arm};
    if (rem != 0 && r.balanced) {
        r.balanced = false;
        r.balanced_witness = w;
    }
    if (rem != static_cast<long long>(d - 1) && r.shift_balanced) {
        r.shift_balanced = false;
        r.shift_balanced_witness = w;
    }
    if (rem == 0 && r.skewed) {
        r.skewed = false;
        r.skewed_witness = w;
    }
    if (rem == static_cast<long long>(d - 1) && r.shift_skewed) {
        r.shift_skewed = false;
        r.shift_skewed_witness = w;
    }
}

} // namespace

HookClassReport classify_partition(const Partition& lambda, int d, int e) {
    validate_de(d, e);
    HookClassReport r;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            int size = lambda.part(i) - j + lambda.col_length(j) - i + 1;
            if (size % e != 0) continue;
            apply_arm(r, lambda.part(i) - j, d, i, j);
        }
    }
    return r;
}

HookClassReport classify_beta_set(const BetaSet& b, int d, int e) {
    validate_de(d, e);
    HookClassReport r;
    // Only explicit beads can sit above an empty space of the form b - ae;
    // every position below the floor is a bead, so the scan is exact.
    for (long long bead : b.explicit_beads()) {
        for (long long v = bead - e; v >= b.floor(); v -= e) {
            if (b.contains(v)) continue;
            long long arm = b.emp_range(v + 1, bead);
            apply_arm(r, arm, d, bead, (bead - v) / e);
        }
    }
    return r;
}

bool regularity_from_balance(const Partition& lambda, int d, int e) {
    require_pre(classify_partition(lambda, d, e).balanced, "partition is not d-balanced");
    return is_e_regular(lambda, e);
}

} // namespace abacus
