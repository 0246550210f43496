#include "abacus/runner_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace abacus {

namespace {

long long mod_pos(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

} // namespace

void validate_de(int d, int e) {
    require_valid(d > 1, "d must be > 1");
    require_valid(d < e, "d must be < e");
    require_valid(std::gcd(d, e) == 1, "d and e must be coprime");
}

bool RunnerMatrix::row_has_zero(int x) const {
    for (int y = 0; y < e; ++y)
        if (at(x, y) == 0) return true;
    return false;
}

bool RunnerMatrix::zero_in_every_row() const {
    for (int x = 1; x < d; ++x)
        if (!row_has_zero(x)) return false;
    return true;
}

bool RunnerMatrix::has_all_positive_row() const {
    for (int x = 1; x < d; ++x)
        if (!row_has_zero(x)) return true;
    return false;
}

long long RunnerMatrix::total() const {
    return std::accumulate(entries.begin(), entries.end(), 0LL);
}

std::vector<std::vector<long long>> RunnerMatrix::rows() const {
    std::vector<std::vector<long long>> out;
    for (int x = 1; x < d; ++x)
        out.emplace_back(entries.begin() + static_cast<std::ptrdiff_t>(x - 1) * e,
                         entries.begin() + static_cast<std::ptrdiff_t>(x) * e);
    return out;
}

RunnerMatrix runner_matrix_of_partition(const Partition& lambda, int d, int e) {
    RunnerMatrix m(d, e);
    for (int i = 1; i <= lambda.length(); ++i) {
        int x = static_cast<int>(mod_pos(lambda.part(i), d));
        if (x == 0) continue;
        int y = static_cast<int>(mod_pos(lambda.part(i) - i, e));
        ++m.at(x, y);
    }
    return m;
}

RunnerMatrix runner_matrix_of_beta_set(const BetaSet& b, int d, int e) {
    RunnerMatrix m(d, e);
    for (long long bead : b.explicit_beads()) {
        int x = static_cast<int>(mod_pos(b.emp(bead), d));
        if (x == 0) continue;
        int y = static_cast<int>(mod_pos(bead, e));
        ++m.at(x, y);
    }
    return m;
}

CombinedPair::CombinedPair(BetaSet b_, std::vector<long long> c_)
    : b(std::move(b_)), c(std::move(c_)) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
}

bool CombinedPair::max_min_condition() const {
    return c.empty() || b.max_bead() <= c.front();
}

namespace {

void require_pair(const CombinedPair& p) {
    require_pre(p.max_min_condition(), "pair violates max B <= min C");
}

long long bd_c(const CombinedPair& p, long long u, long long v) {
    auto lo = std::lower_bound(p.c.begin(), p.c.end(), u);
    auto hi = std::upper_bound(p.c.begin(), p.c.end(), v);
    return hi - lo;
}

} // namespace

long long combined_emp_range(const CombinedPair& p, long long u, long long v) {
    return p.b.emp_range(u, v) - bd_c(p, u, v);
}

long long combined_emp(const CombinedPair& p, long long v) {
    long long below = std::upper_bound(p.c.begin(), p.c.end(), v) - p.c.begin();
    return p.b.emp(v) - below;
}

RunnerMatrix combined_runner_matrix(const CombinedPair& p, int d, int e) {
    require_pair(p);
    RunnerMatrix m = runner_matrix_of_beta_set(p.b, d, e);
    for (long long c : p.c) {
        int x = static_cast<int>(mod_pos(combined_emp(p, c), d));
        if (x == 0) continue;
        int y = static_cast<int>(mod_pos(c, e));
        ++m.at(x, y);
    }
    return m;
}

bool admissible(const CombinedPair& p, long long f, int e) {
    require_pre(!p.b.contains(f), "f is a bead of B");
    require_pre(!std::binary_search(p.c.begin(), p.c.end(), f), "f is a bead of C");
    long long b0 = p.b.max_bead();
    if (!std::binary_search(p.c.begin(), p.c.end(), b0)) return true;
    if (f > b0 || mod_pos(b0 - f, e) != 0) return true;
    // f has the right form; non-admissible iff it is the only empty space of
    // B among b0, b0 - e, b0 - 2e, ... (all positions below the floor are
    // beads, so the scan is finite).
    for (long long v = b0; v >= p.b.floor(); v -= e) {
        if (v != f && !p.b.contains(v)) return true;
    }
    return false;
}

bool is_d_combined_pair(const CombinedPair& p, int d, int e) {
    validate_de(d, e);
    if (!p.max_min_condition()) return false;

    // (ii) B is d-balanced.
    for (long long bead : p.b.explicit_beads()) {
        for (long long v = bead - e; v >= p.b.floor(); v -= e) {
            if (p.b.contains(v)) continue;
            if (p.b.emp_range(v + 1, bead) % d != 0) return false;
        }
    }

    // (iii) combined emptiness divisibility at admissible gaps below C-beads.
    for (long long c : p.c) {
        for (long long v = c - e; v >= p.b.floor(); v -= e) {
            if (p.b.contains(v) || std::binary_search(p.c.begin(), p.c.end(), v)) continue;
            if (!admissible(p, v, e)) continue;
            if (combined_emp_range(p, v, c) % d != 0) return false;
        }
    }
    return true;
}

} // namespace abacus
