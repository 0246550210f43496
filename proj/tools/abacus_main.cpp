// Command-line front end for the partition/abacus toolkit.
//
// Exit codes: 0 success, 2 validation error (bad partition text or flags),
// 3 precondition error (e.g. a non-e-regular input to `mullineux`),
// 1 internal property violation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abacus/beta_set.hpp"
#include "abacus/enumerate.hpp"
#include "abacus/extremal.hpp"
#include "abacus/hook_classes.hpp"
#include "abacus/mullineux.hpp"
#include "abacus/partition.hpp"
#include "abacus/runner_matrix.hpp"
#include "abacus/sweep.hpp"
#include "abacus/text.hpp"

namespace {

using nlohmann::json;

struct Options {
    int e = 0;
    int d = 0;
    bool as_json = false;
    bool render = false;
    bool trace = false;
    bool prime = false;
    std::string partition_arg;
    std::string core_arg;
    std::string matrix_arg;
    std::string beta_arg;
    int max_n = 18;
    std::string pairs_arg;
    bool serial = false;
};

int thread_cap_from_env() {
    const char* env = std::getenv("ABACUS_LAB_THREADS");
    if (!env) return 0;
    try {
        int v = std::stoi(env);
        return v > 0 ? v : 0;
    } catch (const std::exception&) {
        throw abacus::validation_error("ABACUS_LAB_THREADS must be a positive integer");
    }
}

// Runs fn once per input partition: the positional argument when present,
// otherwise every line on stdin (batch mode).
void with_partitions(const Options& opt, const std::function<void(const abacus::Partition&)>& fn) {
    if (!opt.partition_arg.empty()) {
        fn(abacus::parse_partition(opt.partition_arg));
        return;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        fn(abacus::parse_partition(line));
    }
}

void require_e(const Options& opt) {
    abacus::require_valid(opt.e > 2, "--e must be given and > 2");
}

void require_de(const Options& opt) {
    abacus::require_valid(opt.e != 0 && opt.d != 0, "--d and --e are required");
    abacus::validate_de(opt.d, opt.e);
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::string token;
    std::stringstream in(text);
    while (std::getline(in, token, ',')) {
        auto colon = token.find(':');
        abacus::require_valid(colon != std::string::npos, "--pairs expects d:e,d:e,...");
        int d = std::stoi(token.substr(0, colon));
        int e = std::stoi(token.substr(colon + 1));
        abacus::validate_de(d, e);
        out.emplace_back(d, e);
    }
    abacus::require_valid(!out.empty(), "--pairs expects at least one d:e pair");
    return out;
}

int cmd_mullineux(const Options& opt) {
    require_e(opt);
    with_partitions(opt, [&](const abacus::Partition& lam) {
        if (opt.trace || opt.render) {
            std::optional<int> d = opt.d != 0 ? std::optional<int>(opt.d) : std::nullopt;
            abacus::AmaTrace trace = abacus::ama_trace(lam, opt.e, d);
            if (opt.render) {
                std::vector<long long> emitted;
                for (const auto& step : trace.steps) {
                    std::cout << abacus::render_abacus_pair(step.s, emitted, opt.e) << "\n";
                    if (step.emitted) emitted.push_back(*step.emitted);
                }
                std::cout << abacus::render_abacus(trace.final_set, opt.e) << "\n";
            }
            if (opt.trace) {
                std::cout << abacus::trace_json(trace, lam, opt.e, d) << "\n";
                return;
            }
            abacus::Partition out = opt.prime ? trace.result : abacus::conjugate(trace.result);
            std::cout << abacus::format_partition(out) << "\n";
            return;
        }
        abacus::Partition out =
            opt.prime ? abacus::ama(lam, opt.e) : abacus::mullineux(lam, opt.e);
        std::cout << abacus::format_partition(out) << "\n";
    });
    return 0;
}

int cmd_core(const Options& opt) {
    require_e(opt);
    with_partitions(opt, [&](const abacus::Partition& lam) {
        abacus::CoreWeight cw = abacus::e_core_weight(abacus::beta_set(lam, 0), opt.e);
        if (opt.render) {
            std::cout << abacus::render_abacus(abacus::beta_set(lam, 0), opt.e) << "\n"
                      << abacus::render_abacus(cw.slid, opt.e) << "\n";
        }
        std::cout << abacus::core_weight_json(cw.core, cw.weight) << "\n";
    });
    return 0;
}

int cmd_classify(const Options& opt) {
    require_de(opt);
    with_partitions(opt, [&](const abacus::Partition& lam) {
        abacus::HookClassReport report = abacus::classify_partition(lam, opt.d, opt.e);
        std::cout << abacus::classify_report_json(lam, opt.d, opt.e, report) << "\n";
    });
    return 0;
}

int cmd_runner_matrix(const Options& opt) {
    require_de(opt);
    with_partitions(opt, [&](const abacus::Partition& lam) {
        abacus::RunnerMatrix m = abacus::runner_matrix_of_partition(lam, opt.d, opt.e);
        std::cout << (opt.as_json ? abacus::matrix_to_json(m) : abacus::matrix_rows_json(m))
                  << "\n";
    });
    return 0;
}

int cmd_j(const Options& opt) {
    require_e(opt);
    with_partitions(opt, [&](const abacus::Partition& lam) {
        std::cout << abacus::format_partition(abacus::j_map(lam, opt.e)) << "\n";
    });
    return 0;
}

int cmd_family(const Options& opt) {
    require_de(opt);
    abacus::Partition gamma = abacus::parse_partition(opt.core_arg);
    abacus::RunnerMatrix matrix = abacus::matrix_from_rows_json(opt.matrix_arg, opt.d, opt.e);
    abacus::FamilyResult fam = abacus::min_weight_and_family(gamma, matrix);
    json j;
    j["gamma"] = abacus::format_partition(fam.gamma);
    j["d"] = opt.d;
    j["e"] = opt.e;
    j["matrix"] = fam.matrix.rows();
    j["w"] = fam.w;
    json members = json::array();
    for (const auto& p : fam.members) members.push_back(abacus::format_partition(p));
    j["members"] = members;
    j["max"] = abacus::format_partition(fam.max_elem);
    j["min"] = fam.min_elem ? json(abacus::format_partition(*fam.min_elem)) : json(nullptr);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_maximize(const Options& opt, bool maximize) {
    require_de(opt);
    with_partitions(opt, [&](const abacus::Partition& lam) {
        abacus::Partition out = maximize ? abacus::maximize(lam, opt.d, opt.e)
                                         : abacus::minimize(lam, opt.d, opt.e);
        std::cout << abacus::format_partition(out) << "\n";
    });
    return 0;
}

int cmd_render(const Options& opt) {
    require_e(opt);
    if (!opt.beta_arg.empty()) {
        std::cout << abacus::render_abacus(abacus::parse_beta_set(opt.beta_arg), opt.e);
        return 0;
    }
    with_partitions(opt, [&](const abacus::Partition& lam) {
        std::cout << abacus::render_abacus(abacus::beta_set(lam, 0), opt.e);
    });
    return 0;
}

int cmd_verify(const Options& opt) {
    abacus::SweepConfig cfg;
    cfg.max_n = opt.max_n;
    cfg.parallel = !opt.serial;
    cfg.thread_cap = thread_cap_from_env();
    if (!opt.pairs_arg.empty()) cfg.de_pairs = parse_pairs(opt.pairs_arg);
    abacus::SweepReport report = abacus::run_sweep(cfg);
    std::cout << abacus::report_jsonl(report);
    if (!report.ok()) {
        for (const auto& p : report.properties)
            if (p.failures != 0)
                std::cerr << "property " << p.property << " failed: " << p.witness << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"James-abacus partition toolkit"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--e", opt.e, "number of runners e (> 2)");
    app.add_option("--d", opt.d, "arm-length modulus d (1 < d < e, coprime to e)");
    app.add_flag("--json", opt.as_json, "machine output");
    app.add_flag("--render", opt.render, "add ASCII abacus output");

    auto add_partition_arg = [&](CLI::App* cmd) {
        cmd->add_option("partition", opt.partition_arg,
                        "partition, e.g. 6,4,2 (reads stdin lines when omitted)");
    };

    CLI::App* mull = app.add_subcommand("mullineux", "Mullineux image of an e-regular partition");
    mull->add_flag("--prime", opt.prime, "emit the conjugated image");
    mull->add_flag("--trace", opt.trace, "dump the algorithm trace as JSON");
    add_partition_arg(mull);

    CLI::App* core = app.add_subcommand("core", "e-core and e-weight");
    add_partition_arg(core);

    CLI::App* classify = app.add_subcommand("classify", "arm-length classes with witnesses");
    add_partition_arg(classify);

    CLI::App* rmatrix = app.add_subcommand("runner-matrix", "d-runner matrix");
    add_partition_arg(rmatrix);

    CLI::App* jmap = app.add_subcommand("j", "one step of the rim recursion");
    add_partition_arg(jmap);

    CLI::App* family = app.add_subcommand("family", "minimal-weight family for a core and matrix");
    family->add_option("--core", opt.core_arg, "e-core partition")->required();
    family->add_option("--matrix", opt.matrix_arg, "matrix rows JSON, e.g. [[0,0,1,0,0],[0,0,0,0,1]]")
        ->required();

    CLI::App* maxi = app.add_subcommand("maximize", "dominance-greatest partition with the same core and matrix");
    add_partition_arg(maxi);
    CLI::App* mini = app.add_subcommand("minimize", "dominance-least partition with the same core and matrix");
    add_partition_arg(mini);

    CLI::App* render = app.add_subcommand("render", "ASCII abacus");
    render->add_option("--beta", opt.beta_arg, "beta-set text 'floor=-4; beads=5,2,-1'");
    add_partition_arg(render);

    CLI::App* verify = app.add_subcommand("verify", "run the exhaustive property sweeps");
    verify->add_option("--max-n", opt.max_n, "size bound scale (default 18)");
    verify->add_option("--pairs", opt.pairs_arg, "d:e pairs, e.g. 2:3,3:5");
    verify->add_flag("--serial", opt.serial, "disable parallel workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (mull->parsed()) return cmd_mullineux(opt);
        if (core->parsed()) return cmd_core(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (rmatrix->parsed()) return cmd_runner_matrix(opt);
        if (jmap->parsed()) return cmd_j(opt);
        if (family->parsed()) return cmd_family(opt);
        if (maxi->parsed()) return cmd_maximize(opt, true);
        if (mini->parsed()) return cmd_maximize(opt, false);
        if (render->parsed()) return cmd_render(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const abacus::validation_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const abacus::precondition_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const abacus::internal_error& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
