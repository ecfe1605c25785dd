#include "rfs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "rfs/bounds.hpp"
#include "rfs/errors.hpp"
#include "rfs/generators.hpp"
#include "rfs/solvers.hpp"
#include "rfs/text.hpp"

namespace rfs {
namespace {

constexpr std::uint64_t kTagGraph = 1;
constexpr std::uint64_t kTagWeights = 2;
constexpr std::uint64_t kTagTree = 3;
constexpr std::uint64_t kTagTerminals = 4;

long pair_count(int n) { return static_cast<long>(n) * (n - 1) / 2; }

Seed trial_seed(const ExperimentConfig& cfg, int n, long m_edges, int trial) {
    return cfg.seed.child({static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m_edges),
                           static_cast<std::uint64_t>(trial)});
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<double> parse_fraction_list(std::string_view text) {
    std::vector<double> out;
    while (!text.empty()) {
        const auto pos = text.find(',');
        out.push_back(parse_double(text.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    if (out.empty()) throw ConfigInvalid("densities: empty list");
    return out;
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.n_min < 2 || cfg.n_min > cfg.n_max)
        throw ConfigInvalid("config: need 2 <= n_min <= n_max");
    if (cfg.trials_per_cell < 1) throw ConfigInvalid("config: trials must be >= 1");
    if (!(cfg.terminal_fraction > 0.0 && cfg.terminal_fraction <= 1.0))
        throw ConfigInvalid("config: terminal_fraction must be in (0, 1]");
    if (cfg.policy.kind == MEdgesPolicy::Kind::density) {
        for (double f : cfg.policy.fractions)
            if (!(f > 0.0 && f <= 1.0)) throw ConfigInvalid("config: densities must be in (0, 1]");
    }
    if (!cfg.dist.nonnegative_support())
        throw ConfigInvalid("config: cost-ratio experiments need a nonnegative-support "
                            "distribution (got " + cfg.dist.id() + ")");
}

using ReferenceSolver =
    std::function<double(const WeightedGraph&, const ExperimentConfig&, Seed)>;

ExperimentResult run_experiment(const ExperimentConfig& cfg, Problem problem,
                                const ReferenceSolver& reference) {
    validate_config(cfg);
    ExperimentResult result;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        // The nominal sweep starts at 3 edges, but anything below n-1 can
        // never be connected; those cells are logged, not run.
        if (cfg.policy.kind == MEdgesPolicy::Kind::full) {
            for (long m = 3; m < n - 1; ++m)
                result.skipped.push_back({n, m, -1, "m_edges below spanning-tree threshold"});
        }
        for (long m_edges : edge_grid(cfg, n)) {
            for (int trial = 0; trial < cfg.trials_per_cell; ++trial) {
                const Seed base = trial_seed(cfg, n, m_edges, trial);
                try {
                    long rejections = 0;
                    const WeightedGraph skeleton =
                        gen_gnm(n, m_edges, base.child(kTagGraph), true, &rejections);
                    const WeightedGraph g =
                        assign_weights(skeleton, cfg.dist, base.child(kTagWeights));
                    const double random_cost = random_feasible_tree(g, base.child(kTagTree)).cost;
                    const double reference_cost = reference(g, cfg, base);
                    if (!(reference_cost > 0.0)) {
                        ++result.dropped_nonpositive_reference;
                        continue;
                    }
                    result.records.push_back({problem, n, m_edges, cfg.dist.id(), trial,
                                              random_cost, reference_cost,
                                              random_cost / reference_cost, rejections});
                } catch (const Error& e) {
                    result.failed.push_back({n, m_edges, trial, e.what()});
                }
            }
        }
    }
    return result;
}

std::string csv_int_or_empty(int value) { return value < 0 ? "" : std::to_string(value); }

const char* status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "";
}

// One (distribution, k) verification pass evaluated from a sweep.
void evaluate_checks(const DistributionSpec& dist, int k, const OrderStatSweep& sweep,
                     const VerificationOptions& options, std::vector<CheckRow>& rows) {
    const MomentSpec mom = dist.moments();

    if (options.order_stat_checks) {
        for (int r = 1; r <= k; ++r) {
            const Bounds bounds = order_stat_expectation_bounds({r, k}, mom);
            const SampleEstimate& est = sweep.ranks[r - 1];
            CheckRow row;
            row.check = "order_stat_interval";
            row.dist_id = dist.id();
            row.k = k;
            row.r = r;
            row.bound_lower = bounds.lower;
            row.bound_upper = bounds.upper;
            row.has_lower = row.has_upper = true;
            row.estimate = est.mean;
            row.std_error = est.std_error;
            row.samples = est.n_samples;
            const double slack = 3.0 * est.std_error;
            row.status = (est.mean >= bounds.lower - slack && est.mean <= bounds.upper + slack)
                             ? CheckStatus::pass
                             : CheckStatus::fail;
            rows.push_back(std::move(row));
        }
    }

    if (options.trimmed_sum_checks) {
        for (int m = 1; m <= k; ++m) {
            CheckRow row;
            row.check = "min_sum_lower";
            row.dist_id = dist.id();
            row.k = k;
            row.m = m;
            row.samples = sweep.n_samples;
            if (2 * m > k) {
                row.status = CheckStatus::skip;
                row.reason = "precondition: 2m > k";
                rows.push_back(std::move(row));
                continue;
            }
            const double bound = trimmed_min_sum_lower_bound({k, m, 1}, mom);
            const SampleEstimate& est = sweep.min_sums[m - 1];
            row.bound_lower = bound;
            row.has_lower = true;
            row.estimate = est.mean;
            row.std_error = est.std_error;
            row.status =
                est.mean > bound - 3.0 * est.std_error ? CheckStatus::pass : CheckStatus::fail;
            rows.push_back(std::move(row));
        }
        for (int ell = 1; ell <= k; ++ell) {
            CheckRow row;
            row.check = "max_sum_upper";
            row.dist_id = dist.id();
            row.k = k;
            row.ell = ell;
            row.samples = sweep.n_samples;
            if (2 * (ell - 1) > k) {
                row.status = CheckStatus::skip;
                row.reason = "precondition: 2(ell-1) > k";
                rows.push_back(std::move(row));
                continue;
            }
            const double bound = trimmed_max_sum_upper_bound({k, 1, ell}, mom);
            const SampleEstimate& est = sweep.max_sums[ell - 1];
            row.bound_upper = bound;
            row.has_upper = true;
            row.estimate = est.mean;
            row.std_error = est.std_error;
            row.status =
                est.mean <= bound + 3.0 * est.std_error ? CheckStatus::pass : CheckStatus::fail;
            rows.push_back(std::move(row));
        }
    }

    if (options.factor_checks) {
        for (int m = 1; 2 * m <= k; ++m) {
            for (int ell = 1; 2 * (ell - 1) <= k; ++ell) {
                CheckRow row;
                row.check = "factor_bound";
                row.dist_id = dist.id();
                row.k = k;
                row.m = m;
                row.ell = ell;
                const SampleEstimate& y_star = sweep.min_sums[m - 1];
                const SampleEstimate& y = sweep.max_sums[ell - 1];
                row.samples = y.n_samples;

                const BoundReport report = approx_factor_bound({k, m, ell}, mom);
                if (report.relaxed_value) {
                    row.bound_lower = *report.relaxed_value;
                    row.has_lower = true;
                }
                if (!report.exact_value) {
                    row.status = CheckStatus::skip;
                    row.reason = "exact bound undefined";
                    rows.push_back(std::move(row));
                    continue;
                }
                row.bound_upper = *report.exact_value;
                row.has_upper = true;

                if (!(std::abs(y_star.mean) > 5.0 * y_star.std_error)) {
                    row.status = CheckStatus::skip;
                    row.reason = "denominator within 5 std errors of zero";
                    rows.push_back(std::move(row));
                    continue;
                }
                const double factor = empirical_approx_factor(y_star, y);
                const double se = empirical_approx_factor_std_error(
                    y_star, y, sweep.trimmed_mean_covariance(m, ell));
                row.estimate = factor;
                row.std_error = se;
                row.status = factor <= *report.exact_value + 3.0 * se ? CheckStatus::pass
                                                                      : CheckStatus::fail;
                rows.push_back(std::move(row));
            }
        }
    }
}

}  // namespace

std::string problem_name(Problem problem) {
    return problem == Problem::mst ? "mst" : "steiner";
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    bool saw_density_list = false;
    for (const std::string& raw : split_lines(text)) {
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigInvalid("config: expected 'key = value', got '" + std::string(line) + "'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key == "problem") {
            if (value == "mst") cfg.problem = Problem::mst;
            else if (value == "steiner") cfg.problem = Problem::steiner;
            else throw ConfigInvalid("config: unknown problem '" + value + "'");
        } else if (key == "n_min") {
            cfg.n_min = static_cast<int>(parse_int(value));
        } else if (key == "n_max") {
            cfg.n_max = static_cast<int>(parse_int(value));
        } else if (key == "policy") {
            if (value == "full") cfg.policy.kind = MEdgesPolicy::Kind::full;
            else if (value == "density") cfg.policy.kind = MEdgesPolicy::Kind::density;
            else throw ConfigInvalid("config: unknown policy '" + value + "'");
        } else if (key == "densities") {
            cfg.policy.fractions = parse_fraction_list(value);
            saw_density_list = true;
        } else if (key == "dist") {
            cfg.dist = DistributionSpec::parse(value);
        } else if (key == "trials") {
            cfg.trials_per_cell = static_cast<int>(parse_int(value));
        } else if (key == "seed") {
            cfg.seed = Seed{parse_u64(value)};
        } else if (key == "terminal_fraction") {
            cfg.terminal_fraction = parse_double(value);
        } else {
            throw ConfigInvalid("config: unknown key '" + key + "'");
        }
    }
    if (saw_density_list && cfg.policy.kind == MEdgesPolicy::Kind::full)
        throw ConfigInvalid("config: densities given but policy is 'full'");
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::vector<long> edge_grid(const ExperimentConfig& cfg, int n) {
    const long max_edges = pair_count(n);
    std::vector<long> grid;
    if (cfg.policy.kind == MEdgesPolicy::Kind::full) {
        for (long m = n - 1; m <= max_edges; ++m) grid.push_back(m);
        return grid;
    }
    for (double fraction : cfg.policy.fractions) {
        const long m = std::clamp(std::lround(fraction * static_cast<double>(max_edges)),
                                  static_cast<long>(n - 1), max_edges);
        grid.push_back(m);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

ExperimentResult run_mst_experiment(const ExperimentConfig& cfg) {
    if (cfg.problem != Problem::mst) throw ConfigInvalid("run_mst_experiment: problem != mst");
    return run_experiment(cfg, Problem::mst,
                          [](const WeightedGraph& g, const ExperimentConfig&, Seed) {
                              return mst(g).cost;
                          });
}

ExperimentResult run_steiner_experiment(const ExperimentConfig& cfg) {
    if (cfg.problem != Problem::steiner)
        throw ConfigInvalid("run_steiner_experiment: problem != steiner");
    return run_experiment(
        cfg, Problem::steiner,
        [](const WeightedGraph& g, const ExperimentConfig& cfg_inner, Seed base) {
            const int count =
                static_cast<int>(cfg_inner.terminal_fraction * g.vertex_count());
            const SteinerInstance inst =
                pick_terminals(g, count, base.child(kTagTerminals));
            return steiner_2approx(inst).cost;
        });
}

std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records) {
    if (records.empty()) throw EmptyInput("aggregate: no records");
    std::map<std::tuple<std::string, std::string, int, long>, std::vector<double>> groups;
    for (const ExperimentRecord& rec : records)
        groups[{problem_name(rec.problem), rec.dist_id, rec.n, rec.m_edges}].push_back(rec.ratio);

    std::vector<AggregateRow> rows;
    rows.reserve(groups.size());
    for (const auto& [key, ratios] : groups) {
        const auto& [problem, dist_id, n, m_edges] = key;
        const int count = static_cast<int>(ratios.size());
        double sum = 0.0;
        for (double r : ratios) sum += r;
        const double mean = sum / count;
        AggregateRow row{problem == "mst" ? Problem::mst : Problem::steiner,
                         dist_id,
                         n,
                         m_edges,
                         static_cast<double>(m_edges) / static_cast<double>(pair_count(n)),
                         count,
                         mean,
                         std::nullopt};
        if (count >= 2) {
            double sq = 0.0;
            for (double r : ratios) sq += (r - mean) * (r - mean);
            row.std_error = std::sqrt(sq / (count - 1) / count);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string records_csv(const std::vector<ExperimentRecord>& records) {
    std::string out = "problem,n,m_edges,dist,trial,random_cost,reference_cost,ratio,rejections\n";
    for (const ExperimentRecord& r : records) {
        out += problem_name(r.problem) + "," + std::to_string(r.n) + "," +
               std::to_string(r.m_edges) + "," + r.dist_id + "," + std::to_string(r.trial) + "," +
               format_double(r.random_cost) + "," + format_double(r.reference_cost) + "," +
               format_double(r.ratio) + "," + std::to_string(r.rejections) + "\n";
    }
    return out;
}

std::string aggregates_csv(const std::vector<AggregateRow>& rows) {
    std::string out = "problem,dist,n,m_edges,density,trials,mean_ratio,ratio_std_error\n";
    for (const AggregateRow& r : rows) {
        out += problem_name(r.problem) + "," + r.dist_id + "," + std::to_string(r.n) + "," +
               std::to_string(r.m_edges) + "," + format_double(r.density) + "," +
               std::to_string(r.trials) + "," + format_double(r.mean_ratio) + "," +
               (r.std_error ? format_double(*r.std_error) : std::string{}) + "\n";
    }
    return out;
}

bool VerificationReport::all_passed() const {
    return std::none_of(rows.begin(), rows.end(),
                        [](const CheckRow& r) { return r.status == CheckStatus::fail; });
}

int VerificationReport::count(CheckStatus status) const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [status](const CheckRow& r) {
        return r.status == status;
    }));
}

VerificationReport run_bound_verification(const std::vector<DistributionSpec>& dists,
                                          const std::vector<int>& k_grid,
                                          const VerificationOptions& options, Seed seed) {
    for (const DistributionSpec& dist : dists)
        if (!dist.symmetric())
            throw ConfigInvalid("run_bound_verification: " + dist.id() + " is not symmetric");
    if (options.n_samples < 1000)
        throw ConfigInvalid("run_bound_verification: n_samples must be >= 1000");

    VerificationReport report;
    for (const DistributionSpec& dist : dists) {
        for (int k : k_grid) {
            if (k < 1) throw ConfigInvalid("run_bound_verification: k must be >= 1");
            std::vector<CheckRow> rows;
            const OrderStatSweep sweep = sweep_order_statistics(
                dist, k, options.n_samples, seed.child(0), options.factor_checks);
            evaluate_checks(dist, k, sweep, options, rows);

            // One retry at 10x samples for anything that failed; sampling
            // noise is the only honest reason a valid bound check fails.
            if (std::any_of(rows.begin(), rows.end(),
                            [](const CheckRow& r) { return r.status == CheckStatus::fail; })) {
                std::vector<CheckRow> retry_rows;
                const OrderStatSweep retry_sweep = sweep_order_statistics(
                    dist, k, 10 * options.n_samples, seed.child(1), options.factor_checks);
                evaluate_checks(dist, k, retry_sweep, options, retry_rows);
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (rows[i].status == CheckStatus::fail) {
                        rows[i] = retry_rows[i];
                        rows[i].retried = true;
                    }
                }
            }
            for (CheckRow& row : rows) report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::string verification_csv(const VerificationReport& report) {
    std::string out =
        "check,dist,k,r,m,ell,bound_lower,bound_upper,estimate,std_error,samples,retried,"
        "status,reason\n";
    for (const CheckRow& r : report.rows) {
        const bool has_estimate = r.status != CheckStatus::skip;
        out += r.check + "," + r.dist_id + "," + std::to_string(r.k) + "," +
               csv_int_or_empty(r.r) + "," + csv_int_or_empty(r.m) + "," +
               csv_int_or_empty(r.ell) + "," +
               (r.has_lower ? format_double(r.bound_lower) : std::string{}) + "," +
               (r.has_upper ? format_double(r.bound_upper) : std::string{}) + "," +
               (has_estimate ? format_double(r.estimate) : std::string{}) + "," +
               (has_estimate ? format_double(r.std_error) : std::string{}) + "," +
               std::to_string(r.samples) + "," + (r.retried ? "1" : "0") + "," +
               status_name(r.status) + "," + r.reason + "\n";
    }
    return out;
}

}  // namespace rfs
