#include "rfs/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "rfs/errors.hpp"

namespace rfs {
namespace {

constexpr std::uint64_t kTagSweep = fnv1a64("order_stat_sweep");

SampleEstimate finalize(double sum, double sum_sq, std::int64_t n) {
    const double mean = sum / static_cast<double>(n);
    const double variance =
        std::max(0.0, (sum_sq - sum * mean) / static_cast<double>(n - 1));
    return {mean, std::sqrt(variance / static_cast<double>(n)), n};
}

void require_sample_budget(std::int64_t n_samples) {
    if (n_samples < 1000)
        throw ParameterOutOfRange("montecarlo: n_samples must be >= 1000");
}

}  // namespace

double OrderStatSweep::trimmed_mean_covariance(int m, int ell) const {
    if (cross_sums_.empty())
        throw PreconditionViolated("sweep did not track covariances");
    if (m < 1 || m > k || ell < 1 || ell > k)
        throw ParameterOutOfRange("trimmed_mean_covariance: rank out of range");
    const double n = static_cast<double>(n_samples);
    const double cross = cross_sums_[static_cast<std::size_t>(m - 1) * k + (ell - 1)];
    const double sample_cov =
        (cross - n * min_sums[m - 1].mean * max_sums[ell - 1].mean) / (n - 1.0);
    return sample_cov / n;
}

OrderStatSweep sweep_order_statistics(const DistributionSpec& dist, int k,
                                      std::int64_t n_samples, Seed seed,
                                      bool track_covariances) {
    if (k < 1) throw ParameterOutOfRange("sweep_order_statistics: k must be >= 1");
    if (n_samples < 2) throw ParameterOutOfRange("sweep_order_statistics: n_samples must be >= 2");

    RandomStream stream(seed.child({kTagSweep, fnv1a64(dist.id()), static_cast<std::uint64_t>(k)}));

    const auto size = static_cast<std::size_t>(k);
    std::vector<double> values(size);
    std::vector<double> rank_sum(size, 0.0), rank_sq(size, 0.0);
    std::vector<double> min_sum(size, 0.0), min_sq(size, 0.0);
    std::vector<double> max_sum(size, 0.0), max_sq(size, 0.0);
    std::vector<double> prefix(size), suffix(size);
    std::vector<double> cross;
    if (track_covariances) cross.assign(size * size, 0.0);

    for (std::int64_t s = 0; s < n_samples; ++s) {
        for (double& v : values) v = dist.sample(stream);
        std::sort(values.begin(), values.end());

        double acc = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            rank_sum[i] += values[i];
            rank_sq[i] += values[i] * values[i];
            acc += values[i];
            prefix[i] = acc;  // sum of the (i+1) smallest
        }
        acc = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            acc += values[size - 1 - i];
            suffix[i] = acc;  // sum of the (i+1) largest
        }
        for (std::size_t i = 0; i < size; ++i) {
            min_sum[i] += prefix[i];
            min_sq[i] += prefix[i] * prefix[i];
            max_sum[i] += suffix[i];
            max_sq[i] += suffix[i] * suffix[i];
        }
        if (track_covariances) {
            for (std::size_t m = 0; m < size; ++m) {
                double* row = cross.data() + m * size;
                const double pm = prefix[m];
                for (std::size_t l = 0; l < size; ++l) row[l] += pm * suffix[l];
            }
        }
    }

    OrderStatSweep sweep;
    sweep.k = k;
    sweep.n_samples = n_samples;
    sweep.ranks.reserve(size);
    sweep.min_sums.reserve(size);
    sweep.max_sums.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        sweep.ranks.push_back(finalize(rank_sum[i], rank_sq[i], n_samples));
        sweep.min_sums.push_back(finalize(min_sum[i], min_sq[i], n_samples));
        sweep.max_sums.push_back(finalize(max_sum[i], max_sq[i], n_samples));
    }
    sweep.cross_sums_ = std::move(cross);
    return sweep;
}

std::vector<SampleEstimate> estimate_order_stat(const DistributionSpec& dist, int k,
                                                const std::vector<int>& ranks,
                                                std::int64_t n_samples, Seed seed) {
    require_sample_budget(n_samples);
    for (int r : ranks)
        if (r < 1 || r > k) throw ParameterOutOfRange("estimate_order_stat: rank out of range");
    const OrderStatSweep sweep = sweep_order_statistics(dist, k, n_samples, seed);
    std::vector<SampleEstimate> out;
    out.reserve(ranks.size());
    for (int r : ranks) out.push_back(sweep.ranks[r - 1]);
    return out;
}

TrimmedSumEstimate estimate_trimmed_sums(const DistributionSpec& dist, int k, int m, int ell,
                                         std::int64_t n_samples, Seed seed) {
    require_sample_budget(n_samples);
    if (m < 1 || m > k || ell < 1 || ell > k)
        throw ParameterOutOfRange("estimate_trimmed_sums: need 1 <= m, ell <= k");
    const OrderStatSweep sweep = sweep_order_statistics(dist, k, n_samples, seed, true);
    return {sweep.min_sums[m - 1], sweep.max_sums[ell - 1],
            sweep.trimmed_mean_covariance(m, ell)};
}

double empirical_approx_factor(const SampleEstimate& y_star, const SampleEstimate& y) {
    if (!(std::abs(y_star.mean) > 5.0 * y_star.std_error))
        throw DenominatorNearZero("empirical_approx_factor: |E[Y*]| within 5 std errors of 0");
    return 1.0 + std::abs(y.mean - y_star.mean) / std::abs(y_star.mean);
}

double empirical_approx_factor_std_error(const SampleEstimate& y_star, const SampleEstimate& y,
                                         double mean_covariance) {
    const double a = y.mean;
    const double b = y_star.mean;
    const double sign_diff = (a - b) >= 0.0 ? 1.0 : -1.0;
    const double sign_b = b >= 0.0 ? 1.0 : -1.0;
    const double df_da = sign_diff / std::abs(b);
    const double df_db = -sign_diff / std::abs(b) - std::abs(a - b) * sign_b / (b * b);
    const double variance = df_da * df_da * y.std_error * y.std_error +
                            df_db * df_db * y_star.std_error * y_star.std_error +
                            2.0 * df_da * df_db * mean_covariance;
    return std::sqrt(std::max(0.0, variance));
}

}  // namespace rfs
