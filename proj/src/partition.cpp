#include "abacus/partition.hpp"

#include <algorithm>
#include <numeric>

namespace abacus {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require_valid(parts_[i] >= 1, "partition parts must be positive");
        if (i > 0) require_valid(parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
    require_valid(i >= 1, "row index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

int Partition::col_length(int j) const {
    require_valid(j >= 1, "column index must be >= 1");
    // parts_ is weakly decreasing, so rows with >= j cells form a prefix.
    int lo = 0, hi = length();
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (parts_[mid] >= j) lo = mid + 1; else hi = mid;
    }
    return lo;
}

bool Partition::contains_cell(int i, int j) const {
    return i >= 1 && j >= 1 && i <= length() && j <= parts_[i - 1];
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition{};
    std::vector<int> cols(lambda.parts()[0]);
    for (int j = 1; j <= lambda.parts()[0]; ++j) cols[j - 1] = lambda.col_length(j);
    return Partition(std::move(cols));
}

bool is_e_regular(const Partition& lambda, int e) {
    require_valid(e >= 2, "e must be >= 2");
    const auto& p = lambda.parts();
    int run = 1;
    for (std::size_t i = 1; i < p.size(); ++i) {
        run = (p[i] == p[i - 1]) ? run + 1 : 1;
        if (run >= e) return false;
    }
    return true;
}

RimHook rim_hook(const Partition& lambda, int i, int j) {
    require_pre(lambda.contains_cell(i, j), "rim hook anchor outside the diagram");
    RimHook h;
    h.start_row = i;
    h.start_col = j;
    h.arm = lambda.part(i) - j;
    h.leg = lambda.col_length(j) - i;
    h.top = i;
    h.bottom = lambda.col_length(j);
    // Row r contributes the cells [max(j, lambda_{r+1}), lambda_r]; collect in
    // traversal order, from the top row rightmost cell downwards.
    for (int r = h.top; r <= h.bottom; ++r) {
        int lo = std::max(j, lambda.part(r + 1));
        if (lo < 1) lo = 1;
        for (int c = lambda.part(r); c >= lo; --c) h.cells.push_back({r, c});
    }
    h.size = static_cast<int>(h.cells.size());
    check_internal(h.size == h.arm + h.leg + 1, "rim hook size mismatch");
    return h;
}

std::vector<RimHook> e_divisible_hooks(const Partition& lambda, int e) {
    require_valid(e > 2, "e must be > 2");
    std::vector<RimHook> out;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            int size = lambda.part(i) - j + lambda.col_length(j) - i + 1;
            if (size % e == 0) out.push_back(rim_hook(lambda, i, j));
        }
    }
    return out;
}

Partition remove_rim_hook(const Partition& lambda, const RimHook& hook) {
    RimHook fresh = rim_hook(lambda, hook.start_row, hook.start_col);
    require_pre(fresh.cells == hook.cells, "hook is not a rim hook of this partition");
    std::vector<int> rows(lambda.parts());
    for (int r = hook.top; r <= hook.bottom; ++r) {
        int lo = std::max(hook.start_col, lambda.part(r + 1));
        if (lo < 1) lo = 1;
        rows[r - 1] = lo - 1;
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

OrderRelation dominance(const Partition& lambda, const Partition& mu) {
    require_pre(lambda.size() == mu.size(), "dominance is defined only for equal sizes");
    if (lambda == mu) return OrderRelation::Equal;

    // mu is dominated by lambda: the length condition plus prefix sums.
    auto dominated_by = [](const Partition& lo, const Partition& hi) {
        if (hi.length() > lo.length()) return false;
        long long slo = 0, shi = 0;
        for (int i = 1; i <= hi.length(); ++i) {
            slo += lo.part(i);
            shi += hi.part(i);
            if (slo > shi) return false;
        }
        return true;
    };
    if (dominated_by(mu, lambda)) return OrderRelation::Greater;
    if (dominated_by(lambda, mu)) return OrderRelation::Less;
    return OrderRelation::Incomparable;
}

OrderRelation lex(const Partition& lambda, const Partition& mu) {
    const auto& a = lambda.parts();
    const auto& b = mu.parts();
    if (a == b) return OrderRelation::Equal;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())
               ? OrderRelation::Less
               : OrderRelation::Greater;
}

bool lex_less(const Partition& lambda, const Partition& mu) {
    return lex(lambda, mu) == OrderRelation::Less;
}

bool lex_greater(const Partition& lambda, const Partition& mu) {
    return lex(lambda, mu) == OrderRelation::Greater;
}

namespace {

// Segments of the e-rim traversal. Each segment holds at most e boxes; every
// segment except possibly the last holds exactly e.
std::vector<std::vector<Cell>> e_rim_segments(const Partition& lambda, int e) {
    require_valid(e > 2, "e must be > 2");
    require_pre(!lambda.empty(), "e-rim of the empty partition is undefined");
    std::vector<std::vector<Cell>> segments;
    int row = 1;
    while (row <= lambda.length()) {
        std::vector<Cell> seg;
        int r = row, c = lambda.part(row);
        while (static_cast<int>(seg.size()) < e) {
            seg.push_back({r, c});
            int lo = std::max(1, lambda.part(r + 1));
            if (c > lo) {
                --c;
            } else if (r + 1 <= lambda.length()) {
                ++r;
                c = lambda.part(r);
            } else {
                break; // the rim walk is exhausted
            }
        }
        segments.push_back(std::move(seg));
        row = segments.back().back().row + 1;
    }
    return segments;
}

} // namespace

std::vector<Cell> e_rim(const Partition& lambda, int e) {
    std::vector<Cell> out;
    for (const auto& seg : e_rim_segments(lambda, e))
        out.insert(out.end(), seg.begin(), seg.end());
    return out;
}

std::vector<Cell> proper_e_rim(const Partition& lambda, int e) {
    std::vector<Cell> out;
    for (const auto& seg : e_rim_segments(lambda, e)) {
        if (static_cast<int>(seg.size()) < e) break;
        out.insert(out.end(), seg.begin(), seg.end());
    }
    return out;
}

Partition j_map(const Partition& lambda, int e) {
    require_valid(e > 2, "e must be > 2");
    if (lambda.empty()) return Partition{};
    auto rim = e_rim(lambda, e);
    std::vector<int> removed(lambda.length(), 0);
    for (const auto& cell : rim) ++removed[cell.row - 1];
    bool divisible = static_cast<int>(rim.size()) % e == 0;
    std::vector<int> rows(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i) {
        int extra = (i < lambda.length() || divisible) ? 1 : 0;
        rows[i - 1] = lambda.part(i) - removed[i - 1] + extra;
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

} // namespace abacus
