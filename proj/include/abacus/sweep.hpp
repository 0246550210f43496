#pragma once

#include <string>
#include <utility>
#include <vector>

namespace abacus {

// Bounds for the exhaustive property sweeps. Per-property size bounds scale
// proportionally with max_n; the default max_n = 18 yields each property's
// stated bound.
struct SweepConfig {
    int max_n = 18;
    std::vector<int> e_values = {3, 4, 5};
    std::vector<std::pair<int, int>> de_pairs = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    bool parallel = true;
    int thread_cap = 0;      // 0 = runtime default
    long long cascade_target = 10000; // generated swap instances per (d,e) pair
    std::string mutation;    // test-only: name of a deliberately broken variant
};

struct PropertyResult {
    std::string property;
    long long instances = 0;
    long long failures = 0;
    std::string witness; // lexicographically least failing instance
};

struct SweepReport {
    std::vector<PropertyResult> properties;
    bool ok() const {
        for (const auto& p : properties)
            if (p.failures != 0) return false;
        return true;
    }
};

// Runs every property suite in a fixed order; stops after the first property
// that records a failure. Two runs with the same config produce identical
// reports.
SweepReport run_sweep(const SweepConfig& cfg);

// One JSON object per line: {"property":"...","instances":N,"failures":0}.
std::string report_jsonl(const SweepReport& report);

} // namespace abacus
