// Command-line front-end: closed-form bound evaluation, statistical bound
// verification, and the random-solution-vs-reference experiments, all
// emitting deterministic CSV for a given seed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfs/bounds.hpp"
#include "rfs/errors.hpp"
#include "rfs/experiments.hpp"
#include "rfs/generators.hpp"
#include "rfs/graph.hpp"
#include "rfs/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;
constexpr int kExitBoundViolation = 3;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw rfs::Error("cannot open output file '" + path + "'");
    out << text;
}

const char* simplification_name(rfs::Simplification::Kind kind) {
    using Kind = rfs::Simplification::Kind;
    switch (kind) {
        case Kind::two: return "two";
        case Kind::three: return "three";
        case Kind::four: return "four";
        case Kind::epsilon_ge2: return "epsilon_ge2";
        case Kind::epsilon_ge_k: return "epsilon_ge_k";
    }
    return "";
}

void print_bound_report(const rfs::BoundReport& report) {
    using rfs::BoundCase;
    const char* case_name = report.case_id == BoundCase::negative_denominator
                                ? "negative_denominator"
                                : report.case_id == BoundCase::positive_denominator
                                      ? "positive_denominator"
                                      : "degenerate";
    std::cout << "case: " << case_name << "\n";
    std::cout << "exact: "
              << (report.exact_value ? rfs::format_double(*report.exact_value) : "undefined")
              << "\n";
    std::cout << "relaxed: "
              << (report.relaxed_value ? rfs::format_double(*report.relaxed_value) : "undefined")
              << "\n";
    std::cout << "simplifications:";
    if (report.simplifications.empty()) std::cout << " none";
    for (const rfs::Simplification& s : report.simplifications) {
        std::cout << " " << simplification_name(s.kind);
        if (s.kind == rfs::Simplification::Kind::epsilon_ge2 ||
            s.kind == rfs::Simplification::Kind::epsilon_ge_k)
            std::cout << "(" << rfs::format_double(s.epsilon) << ")";
    }
    std::cout << "\n";
    for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
}

struct ExperimentCli {
    std::string config_path;
    std::string out_path;
    std::string agg_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<std::string> dist;
    std::optional<int> n_min;
    std::optional<int> n_max;
    bool full_grid = false;
};

void add_experiment_options(CLI::App* cmd, ExperimentCli& opts) {
    cmd->add_option("--config", opts.config_path, "plain-text key=value config file");
    cmd->add_option("--out", opts.out_path, "records CSV path ('-' for stdout)");
    cmd->add_option("--agg-out", opts.agg_path, "aggregates CSV path");
    cmd->add_option("--seed", opts.seed, "master seed (overrides config)");
    cmd->add_option("--trials", opts.trials, "trials per grid cell (overrides config)");
    cmd->add_option("--dist", opts.dist, "weight distribution, e.g. uniform:0:1");
    cmd->add_option("--n-min", opts.n_min, "smallest vertex count");
    cmd->add_option("--n-max", opts.n_max, "largest vertex count");
    cmd->add_flag("--full-grid", opts.full_grid, "run every edge count instead of the density grid");
}

rfs::ExperimentConfig resolve_config(const ExperimentCli& opts, rfs::Problem problem) {
    rfs::ExperimentConfig cfg;
    if (!opts.config_path.empty()) cfg = rfs::parse_config_file(opts.config_path);
    cfg.problem = problem;
    if (opts.seed) cfg.seed = rfs::Seed{*opts.seed};
    if (opts.trials) cfg.trials_per_cell = *opts.trials;
    if (opts.dist) cfg.dist = rfs::DistributionSpec::parse(*opts.dist);
    if (opts.n_min) cfg.n_min = *opts.n_min;
    if (opts.n_max) cfg.n_max = *opts.n_max;
    if (opts.full_grid) cfg.policy.kind = rfs::MEdgesPolicy::Kind::full;
    return cfg;
}

int run_experiment_command(const ExperimentCli& opts, const rfs::ExperimentConfig& cfg) {
    const rfs::ExperimentResult result = cfg.problem == rfs::Problem::mst
                                             ? rfs::run_mst_experiment(cfg)
                                             : rfs::run_steiner_experiment(cfg);
    write_text(opts.out_path, rfs::records_csv(result.records));
    if (!opts.agg_path.empty())
        write_text(opts.agg_path, rfs::aggregates_csv(rfs::aggregate(result.records)));
    std::cerr << "records: " << result.records.size() << "\n";
    for (const rfs::CellIssue& issue : result.skipped)
        std::cerr << "skipped n=" << issue.n << " m=" << issue.m_edges << ": " << issue.reason
                  << "\n";
    for (const rfs::CellIssue& issue : result.failed)
        std::cerr << "failed n=" << issue.n << " m=" << issue.m_edges
                  << " trial=" << issue.trial << ": " << issue.reason << "\n";
    if (result.dropped_nonpositive_reference > 0)
        std::cerr << "dropped rows with nonpositive reference cost: "
                  << result.dropped_nonpositive_reference << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounds and experiments for randomly chosen feasible solutions"};
    app.require_subcommand(1);

    // bounds
    auto* bounds_cmd =
        app.add_subcommand("bounds", "evaluate the closed-form factor bounds");
    double mu = 0.0;
    double sigma = 1.0;
    std::optional<int> opt_k, opt_m, opt_ell, opt_steiner_n, opt_alpha;
    bounds_cmd->add_option("--mu", mu, "distribution mean")->required();
    bounds_cmd->add_option("--sigma", sigma, "distribution standard deviation")->required();
    bounds_cmd->add_option("--k", opt_k, "number of candidate objects");
    bounds_cmd->add_option("--m", opt_m, "lower bound on optimal solution size");
    bounds_cmd->add_option("--ell", opt_ell, "upper bound on feasible solution size");
    bounds_cmd->add_option("--steiner-n", opt_steiner_n, "vertex count for the Steiner form");
    bounds_cmd->add_option("--alpha", opt_alpha, "terminal count for the Steiner form");

    // verify-bounds
    auto* verify_cmd =
        app.add_subcommand("verify-bounds", "statistically validate the bounds on a grid");
    std::vector<std::string> verify_dists{"normal:0:1", "uniform:-1:1"};
    std::vector<int> verify_ks{4, 10, 20, 40};
    std::int64_t verify_samples = 100000;
    std::uint64_t verify_seed = 1;
    std::string verify_out;
    verify_cmd->add_option("--dist", verify_dists, "symmetric distributions to test");
    verify_cmd->add_option("--k-grid", verify_ks, "object counts to test");
    verify_cmd->add_option("--samples", verify_samples, "samples per (distribution, k)");
    verify_cmd->add_option("--seed", verify_seed, "master seed");
    verify_cmd->add_option("--out", verify_out, "per-check CSV path ('-' for stdout)");

    // experiments
    auto* mst_cmd = app.add_subcommand("mst-experiment",
                                       "random spanning tree vs exact minimum spanning tree");
    ExperimentCli mst_opts;
    add_experiment_options(mst_cmd, mst_opts);

    auto* steiner_cmd = app.add_subcommand(
        "steiner-experiment", "random spanning tree vs the Steiner 2-approximation");
    ExperimentCli steiner_opts;
    add_experiment_options(steiner_cmd, steiner_opts);

    // dump-instance
    auto* dump_cmd = app.add_subcommand("dump-instance", "generate and print one instance");
    int dump_n = 10;
    long dump_m = 20;
    std::uint64_t dump_seed = 1;
    std::string dump_dist;
    std::string dump_out;
    bool dump_connected = false;
    dump_cmd->add_option("--n", dump_n, "vertex count")->required();
    dump_cmd->add_option("--m-edges", dump_m, "edge count")->required();
    dump_cmd->add_option("--seed", dump_seed, "master seed");
    dump_cmd->add_option("--dist", dump_dist, "weight distribution (omit for zero weights)");
    dump_cmd->add_option("--out", dump_out, "output path ('-' for stdout)");
    dump_cmd->add_flag("--connected", dump_connected, "reject disconnected draws");

    // replay
    auto* replay_cmd =
        app.add_subcommand("replay", "re-run an experiment byte-identically from its config");
    ExperimentCli replay_opts;
    replay_cmd->add_option("--config", replay_opts.config_path, "config file")->required();
    replay_cmd->add_option("--out", replay_opts.out_path, "records CSV path")->required();
    replay_cmd->add_option("--agg-out", replay_opts.agg_path, "aggregates CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (bounds_cmd->parsed()) {
            const rfs::MomentSpec mom{mu, sigma};
            if (opt_steiner_n || opt_alpha) {
                if (!opt_steiner_n || !opt_alpha)
                    throw rfs::ConfigInvalid("--steiner-n and --alpha go together");
                std::cout << rfs::format_double(
                                 rfs::steiner_random_solution_bound(*opt_steiner_n, *opt_alpha, mom))
                          << "\n";
            } else {
                if (!opt_k || !opt_m || !opt_ell)
                    throw rfs::ConfigInvalid("need --k, --m and --ell (or --steiner-n, --alpha)");
                print_bound_report(rfs::approx_factor_bound({*opt_k, *opt_m, *opt_ell}, mom));
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            std::vector<rfs::DistributionSpec> dists;
            for (const std::string& id : verify_dists)
                dists.push_back(rfs::DistributionSpec::parse(id));
            rfs::VerificationOptions options;
            options.n_samples = verify_samples;
            const rfs::VerificationReport report =
                rfs::run_bound_verification(dists, verify_ks, options, rfs::Seed{verify_seed});
            write_text(verify_out, rfs::verification_csv(report));
            std::cerr << "checks: " << report.rows.size()
                      << " pass: " << report.count(rfs::CheckStatus::pass)
                      << " fail: " << report.count(rfs::CheckStatus::fail)
                      << " skip: " << report.count(rfs::CheckStatus::skip) << "\n";
            return report.all_passed() ? kExitOk : kExitBoundViolation;
        }
        if (mst_cmd->parsed())
            return run_experiment_command(mst_opts, resolve_config(mst_opts, rfs::Problem::mst));
        if (steiner_cmd->parsed())
            return run_experiment_command(steiner_opts,
                                          resolve_config(steiner_opts, rfs::Problem::steiner));
        if (dump_cmd->parsed()) {
            rfs::WeightedGraph g =
                rfs::gen_gnm(dump_n, dump_m, rfs::Seed{dump_seed}, dump_connected);
            if (!dump_dist.empty())
                g = rfs::assign_weights(g, rfs::DistributionSpec::parse(dump_dist),
                                        rfs::Seed{dump_seed});
            write_text(dump_out, rfs::write_graph(g));
            return kExitOk;
        }
        if (replay_cmd->parsed()) {
            const rfs::ExperimentConfig cfg = rfs::parse_config_file(replay_opts.config_path);
            return run_experiment_command(replay_opts, cfg);
        }
    } catch (const rfs::ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const rfs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return kExitOk;
}
