#pragma once

#include <cstdint>
#include <vector>

#include "rfs/distributions.hpp"
#include "rfs/rng.hpp"

namespace rfs {

struct SampleEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(n_samples)
    std::int64_t n_samples = 0;
};

// One sampling pass for a fixed (distribution, k): draws n_samples vectors
// of k i.i.d. values, sorts each, and accumulates every order-statistic
// mean, every trimmed-sum mean (smallest m, largest ell), and, when
// requested, the covariance between each pair of trimmed-sum means.
class OrderStatSweep {
public:
    int k = 0;
    std::int64_t n_samples = 0;
    std::vector<SampleEstimate> ranks;     // E[X_(r:k)], index r-1
    std::vector<SampleEstimate> min_sums;  // sum of m smallest, index m-1
    std::vector<SampleEstimate> max_sums;  // sum of ell largest, index ell-1

    bool has_covariances() const { return !cross_sums_.empty(); }

    // Covariance between the estimated means of (sum of m smallest) and
    // (sum of ell largest); available when the sweep tracked covariances.
    double trimmed_mean_covariance(int m, int ell) const;

private:
    friend OrderStatSweep sweep_order_statistics(const DistributionSpec&, int, std::int64_t, Seed,
                                                 bool);
    std::vector<double> cross_sums_;  // k*k matrix of sum(min_m * max_ell)
};

OrderStatSweep sweep_order_statistics(const DistributionSpec& dist, int k,
                                      std::int64_t n_samples, Seed seed,
                                      bool track_covariances = false);

// Per-rank estimates of E[X_(r:k)] for the requested 1-based ranks.
// Requires n_samples >= 1000.
std::vector<SampleEstimate> estimate_order_stat(const DistributionSpec& dist, int k,
                                                const std::vector<int>& ranks,
                                                std::int64_t n_samples, Seed seed);

struct TrimmedSumEstimate {
    SampleEstimate y_star;    // sum of the m smallest values
    SampleEstimate y;         // sum of the ell largest values
    double mean_covariance;   // covariance of the two estimated means
};

// Joint estimate of E[Y*] and E[Y] from a single sample stream.
// Requires n_samples >= 1000.
TrimmedSumEstimate estimate_trimmed_sums(const DistributionSpec& dist, int k, int m, int ell,
                                         std::int64_t n_samples, Seed seed);

// Plugs the two estimated means into 1 + |E[Y] - E[Y*]| / |E[Y*]|.
// Requires |y_star.mean| > 5 * y_star.std_error, otherwise the denominator
// is statistically indistinguishable from zero.
double empirical_approx_factor(const SampleEstimate& y_star, const SampleEstimate& y);

// First-order (delta-method) standard error of empirical_approx_factor.
double empirical_approx_factor_std_error(const SampleEstimate& y_star, const SampleEstimate& y,
                                         double mean_covariance);

}  // namespace rfs
