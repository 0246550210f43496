#pragma once

#include <vector>

#include "abacus/beta_set.hpp"
#include "abacus/partition.hpp"

namespace abacus {

// Enforces the standing hypothesis 1 < d < e with d, e coprime.
void validate_de(int d, int e);

// (d-1) x e matrix of non-negative counts, rows x = 1..d-1, columns
// y = 0..e-1.
struct RunnerMatrix {
    int d = 2;
    int e = 3;
    std::vector<long long> entries; // row-major, (d-1) * e

    RunnerMatrix(int d_, int e_) : d(d_), e(e_), entries(static_cast<std::size_t>(d_ - 1) * e_, 0) {
        validate_de(d_, e_);
    }

    long long& at(int x, int y) { return entries[static_cast<std::size_t>(x - 1) * e + y]; }
    long long at(int x, int y) const { return entries[static_cast<std::size_t>(x - 1) * e + y]; }

    bool operator==(const RunnerMatrix&) const = default;

    bool row_has_zero(int x) const;
    bool zero_in_every_row() const;
    bool has_all_positive_row() const;
    long long total() const;
    std::vector<std::vector<long long>> rows() const;
};

RunnerMatrix runner_matrix_of_partition(const Partition& lambda, int d, int e);
RunnerMatrix runner_matrix_of_beta_set(const BetaSet& b, int d, int e);

// A beta-set together with a finite set of already-emitted beads C.
struct CombinedPair {
    BetaSet b;
    std::vector<long long> c; // ascending, duplicates removed

    CombinedPair(BetaSet b_, std::vector<long long> c_);
    bool max_min_condition() const; // max B <= min C (or C empty)
};

long long combined_emp_range(const CombinedPair& p, long long u, long long v);
long long combined_emp(const CombinedPair& p, long long v);

RunnerMatrix combined_runner_matrix(const CombinedPair& p, int d, int e);

// Admissibility of an empty space f of B u C: f is non-admissible exactly
// when max B lies in C and f is the only empty space of B of the form
// (max B) - ke with k >= 0. Errors when f is a bead of B or C.
bool admissible(const CombinedPair& p, long long f, int e);

bool is_d_combined_pair(const CombinedPair& p, int d, int e);

} // namespace abacus
