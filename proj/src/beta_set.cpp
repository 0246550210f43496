#include "abacus/beta_set.hpp"

#include <algorithm>
#include <map>

namespace abacus {

namespace {

long long recover_shift(long long max_bead, const Partition& p) {
    long long first = p.empty() ? 0 : p.parts()[0];
    return max_bead - first + 1;
}

} // namespace

BetaSet::BetaSet(long long floor, std::vector<long long> explicit_beads)
    : floor_(floor), beads_(std::move(explicit_beads)) {
    std::sort(beads_.begin(), beads_.end());
    for (std::size_t i = 0; i < beads_.size(); ++i) {
        require_valid(beads_[i] >= floor_, "explicit beads must lie at or above the floor");
        if (i > 0) require_valid(beads_[i] != beads_[i - 1], "duplicate bead");
    }
    // Derive the shift from the recovered partition.
    std::vector<int> parts;
    for (auto it = beads_.rbegin(); it != beads_.rend(); ++it) {
        long long v = emp(*it);
        if (v == 0) break;
        parts.push_back(static_cast<int>(v));
    }
    shift_ = recover_shift(max_bead(), Partition(parts));
}

bool BetaSet::contains(long long v) const {
    if (v < floor_) return true;
    return std::binary_search(beads_.begin(), beads_.end(), v);
}

long long BetaSet::max_bead() const {
    return beads_.empty() ? floor_ - 1 : beads_.back();
}

long long BetaSet::least_empty() const {
    long long f = floor_;
    for (long long b : beads_) {
        if (b == f) ++f;
        else if (b > f) break;
    }
    return f;
}

bool BetaSet::is_empty_partition() const {
    return max_bead() < least_empty();
}

BetaSet BetaSet::rewindowed(long long new_floor) const {
    require_valid(new_floor <= floor_, "rewindowing may only lower the floor");
    if (new_floor == floor_) return *this;
    std::vector<long long> beads;
    beads.reserve(beads_.size() + static_cast<std::size_t>(floor_ - new_floor));
    for (long long v = new_floor; v < floor_; ++v) beads.push_back(v);
    beads.insert(beads.end(), beads_.begin(), beads_.end());
    return BetaSet(new_floor, std::move(beads));
}

BetaSet BetaSet::normalized() const {
    long long f = least_empty();
    std::vector<long long> beads;
    for (long long b : beads_)
        if (b > f) beads.push_back(b);
    return BetaSet(f, std::move(beads));
}

bool BetaSet::same_set(const BetaSet& other) const {
    BetaSet a = normalized(), b = other.normalized();
    return a.floor() == b.floor() && a.explicit_beads() == b.explicit_beads();
}

long long BetaSet::bd(long long u, long long v) const {
    require_valid(u <= v + 1, "bd requires u <= v + 1");
    if (u == v + 1) return 0;
    long long implicit = 0;
    if (u < floor_) implicit = std::min(v, floor_ - 1) - u + 1;
    auto lo = std::lower_bound(beads_.begin(), beads_.end(), u);
    auto hi = std::upper_bound(beads_.begin(), beads_.end(), v);
    return implicit + (hi - lo);
}

long long BetaSet::emp_range(long long u, long long v) const {
    require_valid(u <= v + 1, "emp_range requires u <= v + 1");
    return 1 + v - u - bd(u, v);
}

long long BetaSet::emp(long long v) const {
    if (v < floor_) return 0;
    return emp_range(floor_, v);
}

BetaSet beta_set(const Partition& lambda, long long s) {
    long long floor = s - lambda.length();
    std::vector<long long> beads;
    beads.reserve(lambda.length());
    for (int i = lambda.length(); i >= 1; --i)
        beads.push_back(lambda.part(i) - i + s);
    return BetaSet(floor, std::move(beads));
}

std::pair<Partition, long long> partition_of(const BetaSet& b) {
    std::vector<int> parts;
    const auto& beads = b.explicit_beads();
    for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
        long long v = b.emp(*it);
        if (v == 0) break;
        parts.push_back(static_cast<int>(v));
    }
    return {Partition(std::move(parts)), b.shift()};
}

long long size_of(const BetaSet& b) {
    // Route one: the emptiness values of the beads are the parts.
    long long by_emp = 0;
    for (long long bead : b.explicit_beads()) by_emp += b.emp(bead);

    // Route two: translate the whole set by -(f0 - 1), where f0 is the least
    // empty space. The translated set contains every non-positive integer and
    // has its bead 0 at the old f0 - 1, so the bead-position formula applies.
    long long f0 = b.least_empty();
    long long n = 1, sum = 0; // the translated bead at position 0
    for (long long bead : b.explicit_beads()) {
        if (bead > f0) {
            ++n;
            sum += bead - (f0 - 1);
        }
    }
    long long by_pos = sum - n * (n - 1) / 2;
    check_internal(by_emp == by_pos, "size formulas disagree");
    return by_emp;
}

CoreWeight e_core_weight(const BetaSet& b, int e) {
    require_valid(e > 2, "e must be > 2");
    // Per runner, compact the explicit beads onto the lowest slots of that
    // runner at or above the floor.
    std::map<long long, std::vector<long long>> by_runner;
    for (long long bead : b.explicit_beads()) {
        long long r = ((bead - b.floor()) % e + e) % e;
        by_runner[r].push_back(bead);
    }
    std::vector<long long> slid;
    long long weight = 0;
    for (auto& [r, beads] : by_runner) {
        for (std::size_t k = 0; k < beads.size(); ++k) {
            long long target = b.floor() + r + static_cast<long long>(k) * e;
            check_internal(beads[k] >= target, "slide target above bead");
            weight += (beads[k] - target) / e;
            slid.push_back(target);
        }
    }
    BetaSet slid_set(b.floor(), std::move(slid));
    auto [core, s] = partition_of(slid_set);
    check_internal(s == b.shift(), "sliding beads up must preserve the shift");
    check_internal(size_of(b) == core.size() + weight * e, "core/weight size identity failed");
    return CoreWeight{std::move(core), weight, std::move(slid_set)};
}

bool same_core(const BetaSet& b1, const BetaSet& b2, int e) {
    require_valid(e > 2, "e must be > 2");
    require_pre(b1.shift() == b2.shift(), "same_core requires equal shifts");
    // Count positive beads per runner over windows containing all
    // non-positive integers.
    auto counts = [e](const BetaSet& b) {
        BetaSet w = b.floor() <= 1 ? b : b.rewindowed(1);
        std::vector<long long> c(e, 0);
        for (long long bead : w.explicit_beads())
            if (bead > 0) ++c[static_cast<std::size_t>(((bead % e) + e) % e)];
        return c;
    };
    return counts(b1) == counts(b2);
}

BeadWindow BeadWindow::of(const BetaSet& b) {
    return BeadWindow{b.floor(), b.explicit_beads()};
}

bool BeadWindow::contains(long long v) const {
    if (v < floor) return true;
    return std::binary_search(beads.begin(), beads.end(), v);
}

void BeadWindow::extend_down(long long new_floor) {
    if (new_floor >= floor) return;
    std::vector<long long> front;
    front.reserve(static_cast<std::size_t>(floor - new_floor));
    for (long long v = new_floor; v < floor; ++v) front.push_back(v);
    beads.insert(beads.begin(), front.begin(), front.end());
    floor = new_floor;
}

void BeadWindow::insert(long long v) {
    check_internal(v >= floor, "inserting below the window floor");
    auto it = std::lower_bound(beads.begin(), beads.end(), v);
    check_internal(it == beads.end() || *it != v, "inserting an existing bead");
    beads.insert(it, v);
}

void BeadWindow::erase(long long v) {
    if (v < floor) extend_down(v);
    auto it = std::lower_bound(beads.begin(), beads.end(), v);
    check_internal(it != beads.end() && *it == v, "erasing a missing bead");
    beads.erase(it);
}

BetaSet BeadWindow::freeze() const {
    return BetaSet(floor, beads);
}

} // namespace abacus
