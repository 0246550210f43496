#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "abacus/errors.hpp"

namespace abacus {

enum class OrderRelation { Less, Greater, Equal, Incomparable };

// A partition: weakly decreasing finite sequence of positive parts.
// Rows and columns of the Young diagram are 1-indexed throughout.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const;
    bool empty() const { return parts_.empty(); }

    // 1-indexed part access; 0 beyond the last row.
    int part(int i) const;
    // Number of rows with at least j cells, i.e. the j-th part of the conjugate.
    int col_length(int j) const;
    bool contains_cell(int i, int j) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
};

// Rim hook anchored at (start_row, start_col). Cells are listed in the rim
// traversal order, from the top-right end down to the bottom-left end.
struct RimHook {
    int start_row = 0;
    int start_col = 0;
    std::vector<Cell> cells;
    int size = 0;
    int arm = 0;
    int leg = 0;
    int top = 0;
    int bottom = 0;
};

Partition conjugate(const Partition& lambda);

// True iff no part value occurs e or more times.
bool is_e_regular(const Partition& lambda, int e);

// The rim hook R_{i,j}; (i,j) must be a cell of the diagram.
RimHook rim_hook(const Partition& lambda, int i, int j);

// All rim hooks of size divisible by e, scanned over every cell, ordered by
// anchor (i, j).
std::vector<RimHook> e_divisible_hooks(const Partition& lambda, int e);

// Removes a rim hook; errors if `hook` is not a rim hook of `lambda`.
Partition remove_rim_hook(const Partition& lambda, const RimHook& hook);

// Dominance comparison of two partitions of equal size (errors otherwise).
// Returns Greater when mu is strictly dominated by lambda.
OrderRelation dominance(const Partition& lambda, const Partition& mu);

// Total lexicographic comparison; refines dominance where the latter decides.
OrderRelation lex(const Partition& lambda, const Partition& mu);
bool lex_less(const Partition& lambda, const Partition& mu);
bool lex_greater(const Partition& lambda, const Partition& mu);

// The e-rim: traverse the rim from (1, lambda_1); take e boxes (or all that
// remain), then jump to the rightmost box of the next row; repeat. The proper
// e-rim drops the final segment when it is shorter than e boxes.
std::vector<Cell> e_rim(const Partition& lambda, int e);
std::vector<Cell> proper_e_rim(const Partition& lambda, int e);

// One step of Xu's recursion: remove the e-rim and add a box back to each of
// the original rows, except the last one when the e-rim size is not divisible
// by e. Defined by this diagram procedure for every partition.
Partition j_map(const Partition& lambda, int e);

} // namespace abacus
