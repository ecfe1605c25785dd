#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfs/distributions.hpp"
#include "rfs/montecarlo.hpp"
#include "rfs/rng.hpp"

namespace rfs {

enum class Problem { mst, steiner };

std::string problem_name(Problem problem);

// Which edge counts to run per vertex count: either the full sweep
// m in {n-1, ..., C(n,2)} or a grid of densities (fractions of C(n,2),
// clamped to at least n-1).
struct MEdgesPolicy {
    enum class Kind { full, density };
    Kind kind = Kind::density;
    std::vector<double> fractions = {0.3, 0.5, 0.7, 1.0};
};

struct ExperimentConfig {
    Problem problem = Problem::mst;
    int n_min = 4;
    int n_max = 30;
    MEdgesPolicy policy;
    DistributionSpec dist = DistributionSpec::uniform(0.0, 1.0);
    int trials_per_cell = 100;
    Seed seed{1};
    double terminal_fraction = 0.5;  // Steiner only
};

// Plain-text key-value config (one `key = value` per line, '#' comments).
// Keys: problem, n_min, n_max, policy (full|density), densities, dist,
// trials, seed, terminal_fraction.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Edge-count grid for one vertex count under the config's policy.
std::vector<long> edge_grid(const ExperimentConfig& cfg, int n);

struct ExperimentRecord {
    Problem problem;
    int n;
    long m_edges;
    std::string dist_id;
    int trial;
    double random_cost;     // weight-blind spanning tree
    double reference_cost;  // exact MST, or the Steiner 2-approximation
    double ratio;           // random_cost / reference_cost
    long rejections;        // connectivity rejections while generating
};

struct CellIssue {
    int n;
    long m_edges;
    int trial;  // -1 when the whole cell was skipped
    std::string reason;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;
    std::vector<CellIssue> skipped;
    std::vector<CellIssue> failed;
    std::int64_t dropped_nonpositive_reference = 0;
};

// Runs the trial grid. Per trial: draw a connected instance, weight it,
// cost the weight-blind tree against the reference solver. Generator or
// solver errors mark the trial failed without aborting the run; records
// are emitted in grid order so output bytes are reproducible.
ExperimentResult run_mst_experiment(const ExperimentConfig& cfg);
ExperimentResult run_steiner_experiment(const ExperimentConfig& cfg);

struct AggregateRow {
    Problem problem;
    std::string dist_id;
    int n;
    long m_edges;
    double density;  // m_edges / C(n,2)
    int trials;
    double mean_ratio;
    std::optional<double> std_error;  // unset for a single trial
};

// Groups records by (n, m_edges) and reports mean ratio, std error, count.
std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records);

std::string records_csv(const std::vector<ExperimentRecord>& records);
std::string aggregates_csv(const std::vector<AggregateRow>& rows);

// --- bound verification ---------------------------------------------------

enum class CheckStatus { pass, fail, skip };

struct CheckRow {
    std::string check;  // order_stat_interval | min_sum_lower | max_sum_upper | factor_bound
    std::string dist_id;
    int k = 0;
    int r = -1;
    int m = -1;
    int ell = -1;
    double bound_lower = 0.0;  // factor_bound: the relaxed closed form (informational)
    double bound_upper = 0.0;  // factor_bound: the exact bound under test
    bool has_lower = false;
    bool has_upper = false;
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    bool retried = false;
    CheckStatus status = CheckStatus::skip;
    std::string reason;
};

struct VerificationOptions {
    bool order_stat_checks = true;
    bool trimmed_sum_checks = true;
    bool factor_checks = true;
    std::int64_t n_samples = 100000;
};

struct VerificationReport {
    std::vector<CheckRow> rows;

    bool all_passed() const;
    int count(CheckStatus status) const;
};

// Statistical validation of the closed-form bounds on a (distribution, k)
// grid: order-statistic intervals per rank, trimmed-sum bounds per size,
// and the factor bound per eligible (m, ell) pair, each at a 3-std-error
// tolerance with one 10x-sample retry for failing checks. Distributions
// must be symmetric.
VerificationReport run_bound_verification(const std::vector<DistributionSpec>& dists,
                                          const std::vector<int>& k_grid,
                                          const VerificationOptions& options, Seed seed);

std::string verification_csv(const VerificationReport& report);

}  // namespace rfs
