// Command-line surface: group/theta/sweep/suen/oracle subcommands with
// machine-readable output (JSON or CSV) on stdout and progress on stderr.
//
// Exit codes: 0 success, 1 computation-domain error (e.g. n < 3 or an
// instance too large to enumerate), 2 input/parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "decomp/group_spec.hpp"
#include "decomp/json_io.hpp"
#include "decomp/montecarlo.hpp"
#include "decomp/oracle.hpp"
#include "decomp/suen.hpp"
#include "decomp/theta.hpp"
#include "decomp/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

// Self-validation in `group` is skipped above this order; the randomized
// associativity scan alone costs 10 n^2 samples.
constexpr std::uint32_t kValidateOrderCap = 4096;

std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t chosen = (std::uint64_t{rd()} << 32) | rd();
    std::cerr << "seed: " << chosen << " (chosen from system entropy; pass --seed "
              << chosen << " to reproduce)\n";
    return chosen;
}

decomp::Variant variant_from_flag(const std::string& name) {
    const auto v = decomp::parse_variant(name);
    if (!v)
        throw CLI::ValidationError("--variant",
                                   "expected one of: both, ab-only, aa");
    return *v;
}

int cmd_group(const std::string& spec, bool full_profile, int workers) {
    const decomp::Group g = decomp::parse_group_spec(spec);

    json validation;
    if (g.backend() == decomp::GroupBackend::dense_table &&
        g.order() <= kValidateOrderCap) {
        decomp::validate_group(g);  // throws on violation
        validation = {{"axioms_checked", true}, {"status", "ok"}};
    } else {
        validation = {{"axioms_checked", false},
                      {"status", "skipped: order beyond the self-check cap; "
                                 "constructors are valid by construction"}};
    }

    const auto p = decomp::profile(g, workers);
    json hist = json::object();
    for (const auto& [size, count] : p.size_histogram())
        hist[std::to_string(size)] = count;

    json doc{{"spec", spec},
             {"order", g.order()},
             {"backend", g.backend() == decomp::GroupBackend::dense_table
                             ? "dense-table"
                             : "permutation"},
             {"identity", g.identity()},
             {"validation", validation},
             {"class_count", p.class_count},
             {"center_size", p.center_size},
             {"commute_probability", decomp::to_json(decomp::commute_probability(p))},
             {"centralizer_size_histogram", hist}};
    if (full_profile) doc["profile"] = decomp::to_json(p);
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_theta(const std::string& spec, int workers) {
    const decomp::Group g = decomp::parse_group_spec(spec);
    const auto p = decomp::profile(g, workers);
    const auto result = decomp::solve_theta(p);
    const auto bounds = decomp::theta_bounds(p);
    json doc{{"spec", spec},
             {"n", g.order()},
             {"theta", decomp::to_json(result)},
             {"bounds", decomp::to_json(bounds)},
             {"critical_size", decomp::critical_size(p)}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_suen(const std::string& spec, std::uint32_t element, std::uint64_t k,
             int workers) {
    const decomp::Group g = decomp::parse_group_spec(spec);
    const auto p = decomp::profile(g, workers);
    const auto report = decomp::suen_point(p, element, k);
    json doc{{"spec", spec},
             {"n", g.order()},
             {"element", element},
             {"report", decomp::to_json(report)},
             {"miss_expectation_upper", decomp::miss_expectation_upper(p, k)}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

struct SweepArgs {
    std::string spec;
    std::uint32_t k_min = 1, k_max = 1, step = 1;
    std::uint64_t trials = 100;
    std::optional<std::uint64_t> seed;
    std::string variant = "both";
    double m_ratio = 1.0;
    int workers = 0;
    std::string out_path;
    std::string meta_path;
    bool adaptive = false;
};

int cmd_sweep(const SweepArgs& args) {
    const decomp::Group g = decomp::parse_group_spec(args.spec);
    const auto variant = variant_from_flag(args.variant);
    const std::uint64_t seed = resolve_seed(args.seed);

    const decomp::SweepCurve curve =
        decomp::sweep(g, args.k_min, args.k_max, args.step, args.trials, seed,
                      variant, args.m_ratio, args.workers);
    for (const auto& pt : curve.points)
        std::cerr << "k=" << pt.k << " p_hat=" << pt.p_hat << "\n";
    for (const auto& warning : curve.warnings)
        std::cerr << "warning: " << warning << "\n";

    const std::string csv = decomp::to_csv(curve);
    if (args.out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(args.out_path);
        if (!out) throw std::domain_error("cannot open output file: " + args.out_path);
        out << csv;
    }

    json meta{{"version", decomp::kVersion},
              {"group_spec", args.spec},
              {"order", g.order()},
              {"variant", decomp::variant_name(variant)},
              {"master_seed", seed},
              {"k_min", args.k_min},
              {"k_max", args.k_max},
              {"step", args.step},
              {"trials_per_k", args.trials},
              {"m_ratio", args.m_ratio},
              {"workers", args.workers},
              {"theta", curve.theta},
              {"critical_prediction", curve.critical_prediction},
              {"crossing_k", curve.crossing_k ? json(*curve.crossing_k) : json()},
              {"crossing_ratio",
               curve.crossing_k && curve.critical_prediction > 0
                   ? json(*curve.crossing_k / curve.critical_prediction)
                   : json()},
              {"warnings", curve.warnings}};

    if (args.adaptive) {
        const auto ac = decomp::locate_crossing_adaptive(
            g, args.k_min, args.k_max, args.trials, seed, variant, args.m_ratio,
            args.workers);
        meta["adaptive_crossing"] =
            ac.found ? json{{"found", true},
                            {"k_low", ac.k_low},
                            {"k_high", ac.k_high},
                            {"crossing_k", ac.crossing_k}}
                     : json{{"found", false}};
    }

    if (args.meta_path.empty()) {
        std::cerr << meta.dump(2) << "\n";
    } else {
        std::ofstream out(args.meta_path);
        if (!out) throw std::domain_error("cannot open metadata file: " + args.meta_path);
        out << meta.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random subset decompositions of finite groups: the theta "
                 "invariant, Suen bounds, exact oracles, and Monte Carlo "
                 "threshold sweeps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", decomp::kVersion);

    // group
    auto* group_cmd = app.add_subcommand(
        "group", "Build and validate a group; print a profile digest");
    std::string group_spec;
    bool full_profile = false;
    int group_workers = 0;
    group_cmd->add_option("--spec", group_spec, "group spec")->required();
    group_cmd->add_flag("--full-profile", full_profile,
                        "include the full centralizer profile");
    group_cmd->add_option("--workers", group_workers, "worker threads (0 = all)");

    // theta
    auto* theta_cmd =
        app.add_subcommand("theta", "Solve the theta invariant and its bounds");
    std::string theta_spec;
    int theta_workers = 0;
    theta_cmd->add_option("--spec", theta_spec, "group spec")->required();
    theta_cmd->add_option("--workers", theta_workers, "worker threads (0 = all)");

    // suen
    auto* suen_cmd = app.add_subcommand(
        "suen", "Suen bounds on the per-element miss probability");
    std::string suen_spec;
    std::uint32_t suen_element = 0;
    std::uint64_t suen_k = 2;
    int suen_workers = 0;
    suen_cmd->add_option("--spec", suen_spec, "group spec")->required();
    suen_cmd->add_option("--element", suen_element, "element index")->required();
    suen_cmd->add_option("--k", suen_k, "draw count")->required();
    suen_cmd->add_option("--workers", suen_workers, "worker threads (0 = all)");

    // sweep
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Monte Carlo sweep of P(G, k) over a k range (CSV output)");
    SweepArgs sweep_args;
    sweep_cmd->add_option("--spec", sweep_args.spec, "group spec")->required();
    sweep_cmd->add_option("--kmin", sweep_args.k_min, "smallest k")->required();
    sweep_cmd->add_option("--kmax", sweep_args.k_max, "largest k")->required();
    sweep_cmd->add_option("--step", sweep_args.step, "k increment");
    sweep_cmd->add_option("--trials", sweep_args.trials, "trials per k");
    sweep_cmd->add_option("--seed", sweep_args.seed,
                          "master seed (default: system entropy, printed)");
    sweep_cmd->add_option("--variant", sweep_args.variant,
                          "covering event: both | ab-only | aa");
    sweep_cmd->add_option("--m-ratio", sweep_args.m_ratio,
                          "size of B relative to A (m = round(m_ratio * k))");
    sweep_cmd->add_option("--workers", sweep_args.workers, "worker threads (0 = all)");
    sweep_cmd->add_option("--out", sweep_args.out_path, "CSV output path (default stdout)");
    sweep_cmd->add_option("--meta", sweep_args.meta_path,
                          "metadata JSON path (default stderr)");
    sweep_cmd->add_flag("--adaptive", sweep_args.adaptive,
                        "also locate the crossing by adaptive bisection in k");

    // oracle
    auto* oracle_cmd =
        app.add_subcommand("oracle", "Exact brute-force enumeration on tiny instances");
    oracle_cmd->require_subcommand(1);
    std::string oracle_spec, oracle_variant = "both", oracle_axis = "row";
    std::uint32_t oracle_k = 1, oracle_m = 0;
    std::uint32_t oracle_x = 0, oracle_y = 0;
    int oracle_workers = 0;

    auto* exact_p_cmd = oracle_cmd->add_subcommand("exact-p", "exact P(G, k)");
    exact_p_cmd->add_option("--spec", oracle_spec, "group spec")->required();
    exact_p_cmd->add_option("--k", oracle_k, "draws for A")->required();
    exact_p_cmd->add_option("--m", oracle_m, "draws for B (default k)");
    exact_p_cmd->add_option("--variant", oracle_variant, "both | ab-only | aa");
    exact_p_cmd->add_option("--workers", oracle_workers, "worker threads (0 = all)");

    auto* single_cmd =
        oracle_cmd->add_subcommand("single-mean", "exact E[I_v(x)] by enumeration");
    single_cmd->add_option("--spec", oracle_spec, "group spec")->required();
    single_cmd->add_option("--element", oracle_x, "element x")->required();

    auto* pair_cmd = oracle_cmd->add_subcommand(
        "pair-mean", "exact E[I_v(x) I_u(y)] by enumeration");
    pair_cmd->add_option("--spec", oracle_spec, "group spec")->required();
    pair_cmd->add_option("--x", oracle_x, "element x")->required();
    pair_cmd->add_option("--y", oracle_y, "element y")->required();
    pair_cmd->add_option("--axis", oracle_axis, "shared index: row | column");

    auto* miss_cmd = oracle_cmd->add_subcommand(
        "miss-dist", "exact distribution of |S| over all draw tuples");
    miss_cmd->add_option("--spec", oracle_spec, "group spec")->required();
    miss_cmd->add_option("--k", oracle_k, "draws for A")->required();
    miss_cmd->add_option("--m", oracle_m, "draws for B (default k)");
    miss_cmd->add_option("--variant", oracle_variant, "both | ab-only | aa");
    miss_cmd->add_option("--workers", oracle_workers, "worker threads (0 = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*group_cmd) return cmd_group(group_spec, full_profile, group_workers);
        if (*theta_cmd) return cmd_theta(theta_spec, theta_workers);
        if (*suen_cmd) return cmd_suen(suen_spec, suen_element, suen_k, suen_workers);
        if (*sweep_cmd) return cmd_sweep(sweep_args);
        if (*oracle_cmd) {
            const decomp::Group g = decomp::parse_group_spec(oracle_spec);
            const std::uint32_t m = oracle_m == 0 ? oracle_k : oracle_m;
            json doc{{"spec", oracle_spec}, {"n", g.order()}};
            if (*exact_p_cmd) {
                doc["k"] = oracle_k;
                doc["m"] = m;
                doc["variant"] = oracle_variant;
                doc["value"] = decomp::to_json(decomp::oracle::exact_p(
                    g, oracle_k, m, variant_from_flag(oracle_variant),
                    oracle_workers));
            } else if (*single_cmd) {
                doc["element"] = oracle_x;
                doc["value"] =
                    decomp::to_json(decomp::oracle::exact_single_mean(g, oracle_x));
            } else if (*pair_cmd) {
                if (oracle_axis != "row" && oracle_axis != "column")
                    throw CLI::ValidationError("--axis", "expected row or column");
                doc["x"] = oracle_x;
                doc["y"] = oracle_y;
                doc["axis"] = oracle_axis;
                doc["value"] = decomp::to_json(decomp::oracle::exact_pair_mean(
                    g, oracle_x, oracle_y,
                    oracle_axis == "row" ? decomp::oracle::SharedAxis::row
                                         : decomp::oracle::SharedAxis::column));
            } else if (*miss_cmd) {
                doc["k"] = oracle_k;
                doc["m"] = m;
                doc["variant"] = oracle_variant;
                doc["distribution"] =
                    decomp::to_json(decomp::oracle::exact_miss_distribution(
                        g, oracle_k, m, variant_from_flag(oracle_variant),
                        oracle_workers));
            }
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const decomp::GroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
