#include "abacus/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "abacus/beta_set.hpp"
#include "abacus/enumerate.hpp"
#include "abacus/extremal.hpp"
#include "abacus/hook_classes.hpp"
#include "abacus/mullineux.hpp"
#include "abacus/partition.hpp"
#include "abacus/runner_matrix.hpp"
#include "abacus/text.hpp"

namespace abacus {

namespace {

class Collector {
public:
    void count(long long k = 1) { instances_.fetch_add(k, std::memory_order_relaxed); }

    void fail(std::string witness) {
        std::lock_guard<std::mutex> guard(mu_);
        ++failures_;
        if (witness_.empty() || witness < witness_) witness_ = std::move(witness);
    }

    PropertyResult finish(std::string name) {
        std::lock_guard<std::mutex> guard(mu_);
        return PropertyResult{std::move(name), instances_.load(), failures_, witness_};
    }

private:
    std::atomic<long long> instances_{0};
    std::mutex mu_;
    long long failures_ = 0;
    std::string witness_;
};

// Per-property bounds scale with cfg.max_n; the default 18 reproduces each
// property's stated bound.
int scaled(const SweepConfig& cfg, int stated) {
    return static_cast<int>(static_cast<long long>(stated) * cfg.max_n / 18);
}

template <class Body>
void over_n(const SweepConfig& cfg, int bound, Collector& col, Body&& body) {
    auto guarded = [&](int n) {
        try {
            body(n);
        } catch (const std::exception& ex) {
            col.fail("n=" + std::to_string(n) + " exception: " + ex.what());
        }
    };
#ifdef _OPENMP
    if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int n = 0; n <= bound; ++n) guarded(n);
        return;
    }
#endif
    for (int n = 0; n <= bound; ++n) guarded(n);
}

std::string pstr(const Partition& p) { return format_partition(p); }

// All coprime pairs 1 < d < e <= 7, for the properties stated over that range.
const std::vector<std::pair<int, int>> kSmallPairs = {
    {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 7}, {4, 5}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};

// ---------------------------------------------------------------------------
// partition-core

void prop_rim_hook_arm_leg(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 20), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            col.count();
            for (int i = 1; i <= lam.length(); ++i) {
                for (int j = 1; j <= lam.part(i); ++j) {
                    RimHook h = rim_hook(lam, i, j);
                    if (h.arm + h.leg != h.size - 1 || h.top > h.bottom || h.top != i) {
                        col.fail("rim hook " + pstr(lam) + " at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
                        return;
                    }
                }
            }
        });
    });
}

void prop_conjugate_involution(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 25), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            col.count();
            Partition cc = conjugate(conjugate(lam));
            if (cc != lam || conjugate(lam).size() != lam.size())
                col.fail("conjugate involution " + pstr(lam));
        });
    });
}

void prop_remove_rim_hook(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            col.count();
            for (int i = 1; i <= lam.length(); ++i) {
                for (int j = 1; j <= lam.part(i); ++j) {
                    RimHook h = rim_hook(lam, i, j);
                    Partition rest = remove_rim_hook(lam, h);
                    if (rest.size() != lam.size() - h.size) {
                        col.fail("remove_rim_hook size " + pstr(lam));
                        return;
                    }
                }
            }
        });
    });
}

void prop_proper_rim_divisible(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        if (n == 0) return;
        for_each_partition(n, [&](const Partition& lam) {
            for (int e : cfg.e_values) {
                col.count();
                auto rim = e_rim(lam, e);
                auto proper = proper_e_rim(lam, e);
                bool divisible = static_cast<int>(rim.size()) % e == 0;
                if ((proper == rim) != divisible || static_cast<int>(proper.size()) % e != 0 ||
                    proper.size() > rim.size() ||
                    !std::equal(proper.begin(), proper.end(), rim.begin()))
                    col.fail("e-rim " + pstr(lam) + " e=" + std::to_string(e));
            }
        });
    });
}

void prop_dominance_order(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 12), col, [&](int n) {
        std::vector<Partition> all;
        for_each_partition(n, [&](const Partition& lam) { all.push_back(lam); });
        for (const auto& a : all) {
            for (const auto& b : all) {
                col.count();
                OrderRelation ab = dominance(a, b), ba = dominance(b, a);
                bool sym = (ab == OrderRelation::Equal && ba == OrderRelation::Equal) ||
                           (ab == OrderRelation::Greater && ba == OrderRelation::Less) ||
                           (ab == OrderRelation::Less && ba == OrderRelation::Greater) ||
                           (ab == OrderRelation::Incomparable && ba == OrderRelation::Incomparable);
                if (!sym || (ab == OrderRelation::Equal) != (a == b)) {
                    col.fail("dominance symmetry " + pstr(a) + " vs " + pstr(b));
                    continue;
                }
                if (ab == OrderRelation::Greater && lex(a, b) != OrderRelation::Greater)
                    col.fail("lex must refine dominance " + pstr(a) + " vs " + pstr(b));
            }
        }
        // Transitivity.
        for (const auto& a : all)
            for (const auto& b : all) {
                if (dominance(a, b) != OrderRelation::Greater) continue;
                for (const auto& c : all) {
                    if (dominance(b, c) != OrderRelation::Greater) continue;
                    if (dominance(a, c) != OrderRelation::Greater)
                        col.fail("dominance transitivity " + pstr(a) + " > " + pstr(b) + " > " +
                                 pstr(c));
                }
            }
    });
}

BetaSet mutated_ms_step(const BetaSet& b, int e) {
    // Deliberately skips moving b_0; wrong for every non-empty partition.
    LeadingBeads lead = leading_beads(b, e);
    BeadWindow w = BeadWindow::of(b);
    for (int i = 1; i <= lead.stable_index; ++i) w.erase(lead.bead(i, e));
    for (int i = 1; i < lead.stable_index; ++i) w.insert(lead.bead(i, e) - e);
    return w.freeze();
}

void prop_j_map_matches_abacus(const SweepConfig& cfg, Collector& col) {
    bool corrupt = cfg.mutation == "corrupt-ms";
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (int e : cfg.e_values) {
                col.count();
                BetaSet b = beta_set(lam, 0);
                BetaSet moved = corrupt ? mutated_ms_step(b, e) : ms_step(b, e);
                if (partition_of(moved).first != j_map(lam, e))
                    col.fail("j_map vs abacus " + pstr(lam) + " e=" + std::to_string(e));
            }
        });
    });
}

// ---------------------------------------------------------------------------
// abacus

void prop_beta_roundtrip(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 20), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (long long s = -3; s <= 3; ++s) {
                col.count();
                auto [back, shift] = partition_of(beta_set(lam, s));
                if (back != lam || shift != s)
                    col.fail("roundtrip " + pstr(lam) + " s=" + std::to_string(s));
            }
        });
    });
}

void prop_rewindow_invariance(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 14), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            col.count();
            BetaSet b = beta_set(lam, 0);
            for (long long drop = 1; drop <= 10; drop += 3) {
                BetaSet low = b.rewindowed(b.floor() - drop);
                bool ok = low.least_empty() == b.least_empty() && low.max_bead() == b.max_bead() &&
                          low.shift() == b.shift() && partition_of(low).first == lam;
                for (long long u = b.floor() - 2; ok && u <= b.max_bead() + 2; ++u) {
                    if (b.bd(u, u + 5) != low.bd(u, u + 5) ||
                        b.emp_range(u, u + 5) != low.emp_range(u, u + 5) ||
                        b.emp(u) != low.emp(u))
                        ok = false;
                }
                if (!ok) col.fail("rewindow " + pstr(lam) + " drop=" + std::to_string(drop));
            }
        });
    });
}

void prop_bead_hook_correspondence(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (int e : cfg.e_values) {
                col.count();
                BetaSet b = beta_set(lam, 0);
                long long beads_over_gap = 0;
                for (long long bead : b.explicit_beads())
                    if (!b.contains(bead - e)) ++beads_over_gap;

                std::vector<RimHook> hooks;
                for (int i = 1; i <= lam.length(); ++i)
                    for (int j = 1; j <= lam.part(i); ++j)
                        if (lam.part(i) - j + lam.col_length(j) - i + 1 == e)
                            hooks.push_back(rim_hook(lam, i, j));
                if (static_cast<long long>(hooks.size()) != beads_over_gap) {
                    col.fail("bead/hook count " + pstr(lam) + " e=" + std::to_string(e));
                    continue;
                }
                for (const auto& h : hooks) {
                    // tp(R)'th largest bead slides up by e.
                    const auto& eb = b.explicit_beads();
                    long long bead = eb[eb.size() - static_cast<std::size_t>(h.top)];
                    BeadWindow w = BeadWindow::of(b);
                    if (b.contains(bead - e)) {
                        col.fail("hook bead occupied " + pstr(lam) + " e=" + std::to_string(e));
                        break;
                    }
                    w.erase(bead);
                    if (bead - e < w.floor) w.extend_down(bead - e);
                    w.insert(bead - e);
                    if (partition_of(w.freeze()).first != remove_rim_hook(lam, h)) {
                        col.fail("hook slide " + pstr(lam) + " e=" + std::to_string(e));
                        break;
                    }
                }
            }
        });
    });
}

void prop_size_formulas(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 20), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (long long s = -2; s <= 2; ++s) {
                col.count();
                if (size_of(beta_set(lam, s)) != lam.size())
                    col.fail("size " + pstr(lam) + " s=" + std::to_string(s));
            }
        });
    });
}

void prop_core_slide_order(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 14), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (int e : cfg.e_values) {
                col.count();
                BetaSet b = beta_set(lam, 0);
                CoreWeight canonical = e_core_weight(b, e);
                std::mt19937 rng(static_cast<unsigned>(n * 131071 + e * 31 + lam.length()));
                for (int round = 0; round < 3; ++round) {
                    BeadWindow w = BeadWindow::of(b);
                    long long slides = 0;
                    while (true) {
                        std::vector<long long> movable;
                        for (long long bead : w.beads)
                            if (!w.contains(bead - e)) movable.push_back(bead);
                        if (movable.empty()) break;
                        long long pick = movable[rng() % movable.size()];
                        w.erase(pick);
                        if (pick - e < w.floor) w.extend_down(pick - e);
                        w.insert(pick - e);
                        ++slides;
                    }
                    if (slides != canonical.weight || !w.freeze().same_set(canonical.slid)) {
                        col.fail("slide order " + pstr(lam) + " e=" + std::to_string(e));
                        break;
                    }
                }
            }
        });
    });
}

// ---------------------------------------------------------------------------
// runner-matrix

void prop_matrix_rotation(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (auto [d, e] : kSmallPairs) {
                RunnerMatrix from_partition = runner_matrix_of_partition(lam, d, e);
                for (long long s = -2; s <= 2; ++s) {
                    col.count();
                    RunnerMatrix from_set = runner_matrix_of_beta_set(beta_set(lam, s), d, e);
                    bool ok = true;
                    for (int x = 1; x < d && ok; ++x)
                        for (int y = 0; y < e && ok; ++y) {
                            int rot = static_cast<int>((((y + s) % e) + e) % e);
                            if (from_partition.at(x, y) != from_set.at(x, rot)) ok = false;
                        }
                    if (!ok)
                        col.fail("matrix rotation " + pstr(lam) + " d=" + std::to_string(d) +
                                 " e=" + std::to_string(e) + " s=" + std::to_string(s));
                }
            }
        });
    });
}

void prop_window_stability(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 14), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (auto [d, e] : cfg.de_pairs) {
                col.count();
                BetaSet b = beta_set(lam, 0);
                long long span = b.max_bead() - b.floor() + 2;
                BetaSet wide = b.rewindowed(b.floor() - span); // doubled window
                auto flags = [](const HookClassReport& r) {
                    return std::make_tuple(r.balanced, r.shift_balanced, r.skewed, r.shift_skewed);
                };
                if (flags(classify_beta_set(b, d, e)) != flags(classify_beta_set(wide, d, e)) ||
                    runner_matrix_of_beta_set(b, d, e) != runner_matrix_of_beta_set(wide, d, e)) {
                    col.fail("window stability " + pstr(lam) + " d=" + std::to_string(d) +
                             " e=" + std::to_string(e));
                    continue;
                }
                // Combined-pair checks are window-stable too.
                std::vector<long long> c = {b.max_bead() + 1, b.max_bead() + 1 + e};
                CombinedPair narrow(b, c), wide_pair(wide, c);
                if (is_d_combined_pair(narrow, d, e) != is_d_combined_pair(wide_pair, d, e) ||
                    combined_runner_matrix(narrow, d, e) != combined_runner_matrix(wide_pair, d, e))
                    col.fail("pair window stability " + pstr(lam) + " d=" + std::to_string(d) +
                             " e=" + std::to_string(e));
            }
        });
    });
}

void prop_combined_invariants(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 20), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (auto [d, e] : cfg.de_pairs) {
                if (!is_e_regular(lam, e)) continue;
                if (!classify_partition(lam, d, e).balanced) continue;
                col.count();
                AmaTrace trace = ama_trace(lam, e, d);
                for (const auto& step : trace.steps) {
                    if (!step.combined_pair_ok.value_or(false)) {
                        col.fail("combined pair broke " + pstr(lam) + " d=" + std::to_string(d) +
                                 " e=" + std::to_string(e));
                        break;
                    }
                }
                if (trace.combined_matrix &&
                    *trace.combined_matrix != runner_matrix_of_partition(lam, d, e))
                    col.fail("combined matrix start " + pstr(lam) + " d=" + std::to_string(d) +
                             " e=" + std::to_string(e));
            }
        });
    });
}

// ---------------------------------------------------------------------------
// hook-classes

void prop_classify_agreement(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (auto [d, e] : kSmallPairs) {
                HookClassReport from_partition = classify_partition(lam, d, e);
                for (long long s = -2; s <= 2; ++s) {
                    col.count();
                    HookClassReport from_set = classify_beta_set(beta_set(lam, s), d, e);
                    if (from_partition.balanced != from_set.balanced ||
                        from_partition.shift_balanced != from_set.shift_balanced ||
                        from_partition.skewed != from_set.skewed ||
                        from_partition.shift_skewed != from_set.shift_skewed)
                        col.fail("classify agreement " + pstr(lam) + " d=" + std::to_string(d) +
                                 " e=" + std::to_string(e) + " s=" + std::to_string(s));
                }
            }
        });
    });
}

void prop_class_hierarchy(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (auto [d, e] : kSmallPairs) {
                col.count();
                HookClassReport r = classify_partition(lam, d, e);
                if ((r.balanced && !r.shift_skewed) || (r.shift_balanced && !r.skewed))
                    col.fail("hierarchy " + pstr(lam) + " d=" + std::to_string(d) +
                             " e=" + std::to_string(e));
            }
        });
    });
}

void prop_d2_collapse(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (int e : {3, 5, 7}) {
                col.count();
                HookClassReport r = classify_partition(lam, 2, e);
                if (r.balanced != r.shift_skewed || r.shift_balanced != r.skewed)
                    col.fail("d=2 collapse " + pstr(lam) + " e=" + std::to_string(e));
            }
        });
    });
}

void prop_balance_regularity(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (auto [d, e] : cfg.de_pairs) {
                col.count();
                if (!classify_partition(lam, d, e).balanced) continue;
                if (!runner_matrix_of_partition(lam, d, e).row_has_zero(1)) continue;
                if (!regularity_from_balance(lam, d, e))
                    col.fail("balanced but irregular " + pstr(lam) + " d=" + std::to_string(d) +
                             " e=" + std::to_string(e));
            }
        });
    });
}

void prop_ms_preserves_balanced(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 20), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (auto [d, e] : cfg.de_pairs) {
                BetaSet b = beta_set(lam, 0);
                if (!classify_beta_set(b, d, e).balanced) continue;
                col.count();
                if (!classify_beta_set(ms_step(b, e), d, e).balanced)
                    col.fail("ms broke balance " + pstr(lam) + " d=" + std::to_string(d) +
                             " e=" + std::to_string(e));
            }
        });
    });
}

// ---------------------------------------------------------------------------
// mullineux

void prop_ama_equals_xu(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for (int e : cfg.e_values) {
            for_each_e_regular(n, e, [&](const Partition& lam) {
                col.count();
                if (ama(lam, e) != xu_recursive(lam, e))
                    col.fail("ama vs xu " + pstr(lam) + " e=" + std::to_string(e));
            });
        }
    });
}

void prop_core_preserved(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for (int e : cfg.e_values) {
            for_each_e_regular(n, e, [&](const Partition& lam) {
                col.count();
                Partition image = ama(lam, e);
                if (e_core_weight(beta_set(image, 0), e).core !=
                    e_core_weight(beta_set(lam, 0), e).core)
                    col.fail("core changed " + pstr(lam) + " e=" + std::to_string(e));
            });
        }
    });
}

void prop_proper_rim_correspondence(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        if (n == 0) return;
        for_each_partition(n, [&](const Partition& lam) {
            for (int e : cfg.e_values) {
                col.count();
                // Diagram side: remove the proper e-rim row by row.
                auto proper = proper_e_rim(lam, e);
                std::vector<int> rows(lam.parts());
                for (const auto& cell : proper) --rows[static_cast<std::size_t>(cell.row - 1)];
                while (!rows.empty() && rows.back() == 0) rows.pop_back();
                Partition diagram_side(rows);

                BetaSet b = beta_set(lam, 0);
                if (proper_rim_removal_via_abacus(b, e) != diagram_side) {
                    col.fail("proper rim removal " + pstr(lam) + " e=" + std::to_string(e));
                    continue;
                }
                // Hook count along the proper e-rim matches the leading beads
                // that leave the set.
                LeadingBeads lead = leading_beads(b, e);
                BetaSet moved = ms_step(b, e);
                long long gone = 0;
                for (int i = 0; i <= lead.stable_index; ++i)
                    if (!moved.contains(lead.bead(i, e))) ++gone;
                if (gone != static_cast<long long>(proper.size()) / e)
                    col.fail("proper rim hook count " + pstr(lam) + " e=" + std::to_string(e));
            }
        });
    });
}

void prop_trace_shape(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for (int e : cfg.e_values) {
            for_each_e_regular(n, e, [&](const Partition& lam) {
                col.count();
                AmaTrace trace = ama_trace(lam, e);
                bool monotone = true;
                for (std::size_t i = 1; i < trace.emitted.size(); ++i)
                    if (trace.emitted[i] >= trace.emitted[i - 1]) monotone = false;
                if (!monotone || trace.result != ama(lam, e) ||
                    static_cast<int>(trace.emitted.size()) != trace.result.length() ||
                    trace.steps.size() != trace.emitted.size() + 1)
                    col.fail("trace shape " + pstr(lam) + " e=" + std::to_string(e));
            });
        }
    });
}

void prop_theorem_main(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 20), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (auto [d, e] : cfg.de_pairs) {
                if (!classify_partition(lam, d, e).balanced) continue;
                RunnerMatrix m = runner_matrix_of_partition(lam, d, e);
                if (!m.row_has_zero(1)) continue;
                col.count();
                Partition image = ama(lam, e);
                HookClassReport r = classify_partition(image, d, e);
                bool ok = r.shift_balanced &&
                          runner_matrix_of_partition(image, d, e) == m &&
                          e_core_weight(beta_set(image, 0), e).core ==
                              e_core_weight(beta_set(lam, 0), e).core &&
                          minimize(lam, d, e) == image;
                if (!ok)
                    col.fail("balanced image " + pstr(lam) + " d=" + std::to_string(d) +
                             " e=" + std::to_string(e));
            }
        });
    });
}

void prop_involution_advisory(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 14), col, [&](int n) {
        for (int e : cfg.e_values) {
            for_each_e_regular(n, e, [&](const Partition& lam) {
                col.count();
                if (mullineux(mullineux(lam, e), e) != lam)
                    col.fail("involution " + pstr(lam) + " e=" + std::to_string(e));
            });
        }
    });
}

// ---------------------------------------------------------------------------
// extremal

struct CascadeInstance {
    Partition lam;
    long long bead;
    long long a;
};

// Deterministic instance stream: partitions by size, beads descending, a
// ascending.
std::vector<CascadeInstance> cascade_instances(int d, int e, long long target) {
    std::vector<CascadeInstance> out;
    for (int n = 0; static_cast<long long>(out.size()) < target; ++n) {
        check_internal(n <= 60, "cascade generation ran away");
        for_each_partition(n, [&](const Partition& lam) {
            if (static_cast<long long>(out.size()) >= target) return;
            BetaSet b = beta_set(lam, 0);
            const auto& beads = b.explicit_beads();
            for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
                for (long long v = *it - e; v >= b.floor(); v -= e) {
                    if (b.contains(v)) continue;
                    out.push_back({lam, *it, (*it - v) / e});
                    if (static_cast<long long>(out.size()) >= target) return;
                }
            }
        });
    }
    (void)d;
    return out;
}

void prop_swap_cascades(const SweepConfig& cfg, Collector& col) {
    long long target = std::max<long long>(1, cfg.cascade_target * cfg.max_n / 18);
    int pair_count = static_cast<int>(cfg.de_pairs.size());
    auto body = [&](int pi) {
        auto [d, e] = cfg.de_pairs[static_cast<std::size_t>(pi)];
        for (const auto& inst : cascade_instances(d, e, target)) {
            col.count();
            BetaSet b = beta_set(inst.lam, 0);
            long long gap = inst.bead - inst.a * e;
            auto [up_set, up_log] = a1(b, inst.bead, inst.a, d, e);
            auto up_res = partition_of(up_set).first;

            std::string tag = pstr(inst.lam) + " b=" + std::to_string(inst.bead) +
                              " a=" + std::to_string(inst.a) + " d=" + std::to_string(d) +
                              " e=" + std::to_string(e);

            // Order postcondition and core preservation.
            bool ok = e_core_weight(up_set, e).core == e_core_weight(b, e).core;
            if (up_res.size() == inst.lam.size())
                ok = ok && dominance(up_res, inst.lam) == OrderRelation::Greater;
            else
                ok = ok && up_res.size() < inst.lam.size();
            if (!ok) {
                col.fail("a1 order " + tag);
                continue;
            }
            // Runner-wise replay and the interval image.
            if (!replay_runner_wise(b, up_log, inst.a * e).same_set(up_set)) {
                col.fail("a1 replay " + tag);
                continue;
            }
            if (!up_log.short_circuit &&
                !a1_interval_image(b, inst.bead, inst.a, e, up_log).same_set(up_set)) {
                col.fail("a1 interval image " + tag);
                continue;
            }
            // Matrix preservation under the divisibility hypothesis.
            if (b.emp_range(gap, inst.bead) % d == 0 &&
                runner_matrix_of_beta_set(up_set, d, e) != runner_matrix_of_beta_set(b, d, e)) {
                col.fail("a1 matrix " + tag);
                continue;
            }

            if (!runner_matrix_of_beta_set(b, d, e).zero_in_every_row()) continue;
            auto [down_set, down_log] = a2(b, inst.bead, inst.a, d, e);
            auto down_res = partition_of(down_set).first;
            ok = e_core_weight(down_set, e).core == e_core_weight(b, e).core;
            if (down_res.size() == inst.lam.size())
                ok = ok && dominance(down_res, inst.lam) == OrderRelation::Less;
            else
                ok = ok && down_res.size() < inst.lam.size();
            if (!ok) {
                col.fail("a2 order " + tag);
                continue;
            }
            if (!replay_runner_wise(b, down_log, inst.a * e).same_set(down_set)) {
                col.fail("a2 replay " + tag);
                continue;
            }
            if (b.emp_range(gap + 1, inst.bead) % d == 0 &&
                runner_matrix_of_beta_set(down_set, d, e) != runner_matrix_of_beta_set(b, d, e))
                col.fail("a2 matrix " + tag);
        }
    };
#ifdef _OPENMP
    if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int pi = 0; pi < pair_count; ++pi) {
            try {
                body(pi);
            } catch (const std::exception& ex) {
                col.fail(std::string("cascade exception: ") + ex.what());
            }
        }
        return;
    }
#endif
    for (int pi = 0; pi < pair_count; ++pi) {
        try {
            body(pi);
        } catch (const std::exception& ex) {
            col.fail(std::string("cascade exception: ") + ex.what());
        }
    }
}

// Families keyed by (core, matrix) collected over all partitions up to
// `bound`; every member of a minimal-weight family has size <= bound, so the
// map is complete for any pair realised within the bound.
struct FamilyKey {
    std::vector<int> gamma;
    std::vector<long long> entries;
    auto operator<=>(const FamilyKey&) const = default;
};

std::map<FamilyKey, std::vector<Partition>> family_map(int bound, int d, int e) {
    std::map<FamilyKey, std::vector<Partition>> fams;
    for (int n = 0; n <= bound; ++n) {
        for_each_partition(n, [&](const Partition& lam) {
            RunnerMatrix m = runner_matrix_of_partition(lam, d, e);
            Partition core = e_core_weight(beta_set(lam, 0), e).core;
            fams[FamilyKey{core.parts(), m.entries}].push_back(lam);
        });
    }
    return fams;
}

void prop_family_extremes(const SweepConfig& cfg, Collector& col) {
    std::vector<std::pair<int, int>> pairs = {{2, 3}, {2, 5}, {3, 5}};
    int bound = scaled(cfg, 16);
    auto body = [&](int pi) {
        auto [d, e] = pairs[static_cast<std::size_t>(pi)];
        for (const auto& [key, all] : family_map(bound, d, e)) {
            col.count();
            Partition gamma{std::vector<int>(key.gamma)};
            RunnerMatrix matrix(d, e);
            matrix.entries = key.entries;
            long long min_size = all.front().size();
            std::vector<Partition> family;
            for (const auto& p : all)
                if (p.size() == min_size) family.push_back(p);

            std::string tag = "family core=" + pstr(gamma) + " d=" + std::to_string(d) +
                              " e=" + std::to_string(e) + " size=" + std::to_string(min_size);

            // At most one shift-skewed / skewed member across every weight.
            std::vector<Partition> shift_skewed, skewed;
            for (const auto& p : all) {
                HookClassReport r = classify_partition(p, d, e);
                if (r.shift_skewed) shift_skewed.push_back(p);
                if (r.skewed) skewed.push_back(p);
            }
            if (shift_skewed.size() > 1 || skewed.size() > 1) {
                col.fail("extreme uniqueness " + tag);
                continue;
            }
            if (matrix.has_all_positive_row() && !skewed.empty()) {
                col.fail("skewed should not exist " + tag);
                continue;
            }

            // The dominance maximum is the shift-skewed member.
            Partition max_elem = family.front();
            for (const auto& p : family)
                if (dominance(p, max_elem) == OrderRelation::Greater) max_elem = p;
            bool max_ok = true;
            for (const auto& p : family) {
                OrderRelation rel = dominance(max_elem, p);
                if (rel != OrderRelation::Greater && rel != OrderRelation::Equal) max_ok = false;
            }
            if (!max_ok || shift_skewed.size() != 1 || shift_skewed.front() != max_elem) {
                col.fail("max vs shift-skewed " + tag);
                continue;
            }
            if (matrix.zero_in_every_row()) {
                Partition min_elem = family.front();
                for (const auto& p : family)
                    if (dominance(p, min_elem) == OrderRelation::Less) min_elem = p;
                bool min_ok = true;
                for (const auto& p : family) {
                    OrderRelation rel = dominance(min_elem, p);
                    if (rel != OrderRelation::Less && rel != OrderRelation::Equal) min_ok = false;
                }
                if (!min_ok || skewed.size() != 1 || skewed.front() != min_elem)
                    col.fail("min vs skewed " + tag);
            }
        }
    };
    int pair_count = static_cast<int>(pairs.size());
#ifdef _OPENMP
    if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int pi = 0; pi < pair_count; ++pi) {
            try {
                body(pi);
            } catch (const std::exception& ex) {
                col.fail(std::string("family exception: ") + ex.what());
            }
        }
        return;
    }
#endif
    for (int pi = 0; pi < pair_count; ++pi) {
        try {
            body(pi);
        } catch (const std::exception& ex) {
            col.fail(std::string("family exception: ") + ex.what());
        }
    }
}

void prop_max_to_min(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 14), col, [&](int n) {
        for_each_partition(n, [&](const Partition& lam) {
            for (auto [d, e] : cfg.de_pairs) {
                col.count();
                Partition top = maximize(lam, d, e);
                RunnerMatrix m = runner_matrix_of_partition(lam, d, e);
                Partition core = e_core_weight(beta_set(lam, 0), e).core;
                std::string tag =
                    pstr(lam) + " d=" + std::to_string(d) + " e=" + std::to_string(e);
                if (!classify_partition(top, d, e).shift_skewed ||
                    runner_matrix_of_partition(top, d, e) != m ||
                    e_core_weight(beta_set(top, 0), e).core != core ||
                    top != greedy_max(core, m)) {
                    col.fail("maximize " + tag);
                    continue;
                }
                if (m.zero_in_every_row()) {
                    Partition bottom = minimize(lam, d, e);
                    if (!classify_partition(bottom, d, e).skewed ||
                        runner_matrix_of_partition(bottom, d, e) != m ||
                        e_core_weight(beta_set(bottom, 0), e).core != core) {
                        col.fail("minimize " + tag);
                        continue;
                    }
                    // Balanced maxima map onto the minima.
                    if (classify_partition(top, d, e).balanced && m.row_has_zero(1) &&
                        ama(top, e) != bottom)
                        col.fail("max-to-min " + tag);
                }
            }
        });
    });
}

void prop_greedy_construction(const SweepConfig& cfg, Collector& col) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [d, e] : cfg.de_pairs)
        if (e <= 5) pairs.emplace_back(d, e);
    long long rounds = std::max<long long>(1, scaled(cfg, 200));
    std::mt19937 rng(20250810);
    for (auto [d, e] : pairs) {
        for (long long round = 0; round < rounds; ++round) {
            col.count();
            // Random e-core from a random partition, random small matrix.
            std::vector<int> parts;
            for (int v = static_cast<int>(rng() % 5) + 1; v >= 1; --v)
                if (rng() % 2) parts.insert(parts.end(), static_cast<std::size_t>(rng() % 2) + 1, v);
            Partition seed = Partition(parts);
            Partition gamma = e_core_weight(beta_set(seed, 0), e).core;
            RunnerMatrix m(d, e);
            for (auto& v : m.entries) v = static_cast<long long>(rng() % 3);
            try {
                Partition built = greedy_max(gamma, m);
                if (runner_matrix_of_partition(built, d, e) != m ||
                    e_core_weight(beta_set(built, 0), e).core != gamma ||
                    !classify_partition(built, d, e).shift_skewed)
                    col.fail("greedy " + pstr(gamma) + " d=" + std::to_string(d) +
                             " e=" + std::to_string(e) + " round=" + std::to_string(round));
            } catch (const std::exception& ex) {
                col.fail(std::string("greedy exception: ") + ex.what());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// oracle

void prop_partition_counts(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 30), col, [&](int n) {
        col.count();
        if (streamed_count(n) != partition_count(n)) {
            col.fail("partition count n=" + std::to_string(n));
            return;
        }
        // Strictly descending lexicographic stream.
        Partition prev;
        bool first = true;
        for_each_partition(n, [&](const Partition& lam) {
            if (!first && !lex_less(lam, prev)) col.fail("stream order n=" + std::to_string(n));
            prev = lam;
            first = false;
        });
    });
}

void prop_e_regular_counts(const SweepConfig& cfg, Collector& col) {
    over_n(cfg, scaled(cfg, 18), col, [&](int n) {
        for (int e : cfg.e_values) {
            col.count();
            long long via_filter = 0;
            for_each_e_regular(n, e, [&](const Partition&) { ++via_filter; });
            long long via_multiplicity = 0;
            for_each_partition(n, [&](const Partition& lam) {
                std::map<int, int> mult;
                for (int part : lam.parts()) ++mult[part];
                bool ok = true;
                for (const auto& [value, count] : mult)
                    if (count >= e) ok = false;
                if (ok) ++via_multiplicity;
            });
            if (via_filter != via_multiplicity)
                col.fail("e-regular count n=" + std::to_string(n) + " e=" + std::to_string(e));
        }
    });
}

using PropertyFn = std::function<void(const SweepConfig&, Collector&)>;

const std::vector<std::pair<std::string, PropertyFn>>& property_table() {
    static const std::vector<std::pair<std::string, PropertyFn>> table = {
        {"partition.rim_hook_arm_leg", prop_rim_hook_arm_leg},
        {"partition.conjugate_involution", prop_conjugate_involution},
        {"partition.remove_rim_hook_size", prop_remove_rim_hook},
        {"partition.proper_rim_iff_divisible", prop_proper_rim_divisible},
        {"partition.dominance_partial_order", prop_dominance_order},
        {"partition.j_map_matches_abacus", prop_j_map_matches_abacus},
        {"abacus.beta_roundtrip", prop_beta_roundtrip},
        {"abacus.rewindow_invariance", prop_rewindow_invariance},
        {"abacus.bead_hook_correspondence", prop_bead_hook_correspondence},
        {"abacus.size_formulas_agree", prop_size_formulas},
        {"abacus.core_slide_order_independent", prop_core_slide_order},
        {"runner_matrix.beta_rotation", prop_matrix_rotation},
        {"runner_matrix.window_stability", prop_window_stability},
        {"runner_matrix.combined_invariant_under_ama", prop_combined_invariants},
        {"hooks.partition_beta_agree", prop_classify_agreement},
        {"hooks.hierarchy", prop_class_hierarchy},
        {"hooks.d2_collapse", prop_d2_collapse},
        {"hooks.balanced_zero_row_regular", prop_balance_regularity},
        {"hooks.ms_preserves_balanced", prop_ms_preserves_balanced},
        {"mullineux.ama_equals_xu", prop_ama_equals_xu},
        {"mullineux.core_preserved", prop_core_preserved},
        {"mullineux.proper_rim_correspondence", prop_proper_rim_correspondence},
        {"mullineux.trace_shape", prop_trace_shape},
        {"mullineux.theorem_main", prop_theorem_main},
        {"mullineux.involution_advisory", prop_involution_advisory},
        {"extremal.swap_cascades", prop_swap_cascades},
        {"extremal.family_extremes", prop_family_extremes},
        {"extremal.max_to_min", prop_max_to_min},
        {"extremal.greedy_construction", prop_greedy_construction},
        {"oracle.partition_counts", prop_partition_counts},
        {"oracle.e_regular_counts", prop_e_regular_counts},
    };
    return table;
}

} // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
    require_valid(cfg.max_n >= 0, "max_n must be non-negative");
    require_valid(cfg.mutation.empty() || cfg.mutation == "corrupt-ms",
                  "unknown mutation '" + cfg.mutation + "'");
    for (int e : cfg.e_values) require_valid(e > 2, "e values must be > 2");
    for (auto [d, e] : cfg.de_pairs) validate_de(d, e);
#ifdef _OPENMP
    if (cfg.thread_cap > 0) omp_set_num_threads(cfg.thread_cap);
#endif
    SweepReport report;
    for (const auto& [name, fn] : property_table()) {
        Collector col;
        fn(cfg, col);
        report.properties.push_back(col.finish(name));
        if (report.properties.back().failures != 0) break; // abort on first failing property
    }
    return report;
}

std::string report_jsonl(const SweepReport& report) {
    std::ostringstream out;
    for (const auto& p : report.properties) {
        out << "{\"property\":\"" << p.property << "\",\"instances\":" << p.instances
            << ",\"failures\":" << p.failures << "}\n";
    }
    return out.str();
}

} // namespace abacus
