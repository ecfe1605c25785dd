#include "rfs/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "rfs/errors.hpp"

namespace rfs {
namespace {

double min_sum_lower(int k, int m, double mu, double sigma) {
    return m * mu - sigma * std::sqrt(2.0 * k) * (std::sqrt(m + 1.0) - 1.0);
}

double max_sum_upper(int k, int ell, double mu, double sigma) {
    return ell * mu + 0.5 * sigma * std::sqrt(2.0 * k) * (2.0 * std::sqrt(ell) - 1.0);
}

}  // namespace

bool BoundReport::has(Simplification::Kind kind) const {
    return std::any_of(simplifications.begin(), simplifications.end(),
                       [kind](const Simplification& s) { return s.kind == kind; });
}

std::optional<double> BoundReport::epsilon_of(Simplification::Kind kind) const {
    for (const Simplification& s : simplifications)
        if (s.kind == kind) return s.epsilon;
    return std::nullopt;
}

double harmonic_half(int n) {
    if (n < 1) throw ParameterOutOfRange("harmonic_half: n must be >= 1");
    double sum = 0.0;
    for (int i = 1; i <= n; ++i) sum += 1.0 / std::sqrt(static_cast<double>(i));
    return sum;
}

Bounds harmonic_half_bounds(int n) {
    if (n < 1) throw ParameterOutOfRange("harmonic_half_bounds: n must be >= 1");
    return {2.0 * std::sqrt(n + 1.0) - 2.0, 2.0 * std::sqrt(static_cast<double>(n)) - 1.0};
}

Bounds order_stat_expectation_bounds(OrderIndex idx, const MomentSpec& mom) {
    const double r = idx.r;
    const double k = idx.k;
    const double mu = mom.mu();
    const double sigma = mom.sigma();

    double lower;
    if (2.0 * r <= k) {
        lower = mu - sigma * std::sqrt(k / (2.0 * r));
    } else {
        lower = mu - sigma * std::sqrt(k * (k - r) / (2.0 * r * r));
    }

    double upper;
    if (2.0 * (r - 1.0) >= k) {
        upper = mu + sigma * std::sqrt(k / (2.0 * (k - r + 1.0)));
    } else {
        upper = mu + sigma * std::sqrt(k * (r - 1.0) / (2.0 * (k - r + 1.0) * (k - r + 1.0)));
    }

    return {lower, upper};
}

double trimmed_min_sum_lower_bound(const ProblemShape& shape, const MomentSpec& mom) {
    if (2 * shape.m > shape.k)
        throw PreconditionViolated("trimmed_min_sum_lower_bound: requires 2m <= k");
    return min_sum_lower(shape.k, shape.m, mom.mu(), mom.sigma());
}

double trimmed_max_sum_upper_bound(const ProblemShape& shape, const MomentSpec& mom) {
    if (2 * (shape.ell - 1) > shape.k)
        throw PreconditionViolated("trimmed_max_sum_upper_bound: requires 2(ell-1) <= k");
    return max_sum_upper(shape.k, shape.ell, mom.mu(), mom.sigma());
}

BoundReport approx_factor_bound(const ProblemShape& shape, const MomentSpec& mom) {
    if (!shape.factor_bound_eligible())
        throw PreconditionViolated("approx_factor_bound: requires 2m <= k and 2(ell-1) <= k");

    const double mu = mom.mu();
    const double sigma = mom.sigma();
    const double k = shape.k;
    const double m = shape.m;
    const double ell = shape.ell;
    const double sqrt2k = std::sqrt(2.0 * k);
    const double sigma_k = sigma * k;  // the relaxed forms use the plain product

    // Sign threshold for the E[Y*] lower bound: it is negative exactly when
    // mu falls below t.
    const double t = sigma * sqrt2k * (std::sqrt(m + 1.0) - 1.0) / m;

    const double y_upper = max_sum_upper(shape.k, shape.ell, mu, sigma);
    const double y_star_lower = min_sum_lower(shape.k, shape.m, mu, sigma);

    BoundReport report;
    report.notes.emplace_back("relaxed forms use sigma*k as the plain product");

    if (mu == t) {
        report.case_id = BoundCase::degenerate;
        report.notes.emplace_back(
            "degenerate: E[Y*] lower bound is exactly 0, the factor is unbounded");
        return report;
    }

    const bool negative = mu < t;
    report.case_id = negative ? BoundCase::negative_denominator : BoundCase::positive_denominator;

    // Exact piecewise value: 1 + (y_upper - y_star_lower)/|y_star_lower|.
    // Meaningful only while y_upper >= y_star_lower; for strongly skewed
    // shapes (large |mu| with ell far from m) the two bounds cross and the
    // expression stops bounding the factor.
    if (y_star_lower == 0.0) {
        // mu != t but the denominator still rounded to zero.
        report.notes.emplace_back("exact value undefined: denominator rounded to zero");
    } else if (y_upper >= y_star_lower) {
        report.exact_value = 1.0 + (y_upper - y_star_lower) / std::abs(y_star_lower);
    } else {
        report.notes.emplace_back(
            "exact value undefined: max-sum upper bound fell below min-sum lower bound");
    }

    if (negative) {
        report.relaxed_value = (ell * mu - 2.0 * m * mu + 3.0 * sigma_k) / (sigma_k - m * mu);
    } else if (m * mu - sigma_k > 0.0) {
        report.relaxed_value = (ell * mu + sigma_k) / (m * mu - sigma_k);
    } else {
        report.notes.emplace_back(
            "relaxed value undefined: m*mu - sigma*k <= 0 in the positive case");
    }

    // Simplified constants; each recorded with its side condition.
    if (mu < t && (ell * mu <= -sigma_k || m * mu > sigma_k)) {
        report.simplifications.push_back({Simplification::Kind::two});
        report.notes.emplace_back(
            "two: mu below threshold and (ell*mu <= -sigma*k or m*mu > sigma*k)");
    }
    if (mu <= 0.0) {
        report.simplifications.push_back({Simplification::Kind::three});
        report.notes.emplace_back("three: mu <= 0");
    }
    if (mu * (ell + 2.0 * m) <= sigma_k) {
        report.simplifications.push_back({Simplification::Kind::four});
        report.notes.emplace_back("four: mu*(ell + 2m) <= sigma*k");
    }

    // Tightest epsilon >= 2 with mu <= sigma*k*(eps-3)/(ell - 2m + eps*m) < t.
    // Solving the first inequality at equality gives exactly the relaxed
    // negative-case value; the bound side is increasing in eps, so the
    // inequality holds iff eps >= that candidate (given sigma*k > m*mu).
    if (sigma_k - m * mu > 0.0) {
        const double candidate = (ell * mu - 2.0 * m * mu + 3.0 * sigma_k) / (sigma_k - m * mu);
        const double eps = std::max(2.0, candidate);
        const double bound_side = sigma_k * (eps - 3.0) / (ell - 2.0 * m + eps * m);
        if (bound_side < t) {
            report.simplifications.push_back({Simplification::Kind::epsilon_ge2, eps});
            report.notes.emplace_back(
                "epsilon_ge2: smallest eps >= 2 with mu <= sigma*k*(eps-3)/(ell-2m+eps*m) < t");
        }
    }
    if (t < mu) {
        const double eps = k + ell * mu / sigma;
        report.simplifications.push_back({Simplification::Kind::epsilon_ge_k, eps});
        report.notes.emplace_back("epsilon_ge_k: eps = k + ell*mu/sigma from mu <= sigma*(eps-k)/ell");
    }

    return report;
}

bool simplifies_to_three(const ProblemShape& shape, const MomentSpec& mom) {
    const double mu = mom.mu();
    const double sigma = mom.sigma();
    const double m = shape.m;
    const double threshold =
        sigma * std::sqrt(2.0 * shape.k) * (std::sqrt(m + 1.0) - 1.0) / m;
    return shape.ell > std::exp(2.0 * std::sqrt(m + 1.0) - 3.0) && mu > threshold &&
           shape.m <= shape.ell && 2 * shape.ell <= shape.k;
}

double steiner_random_solution_bound(int n, int alpha, const MomentSpec& mom) {
    if (n < 4) throw ParameterOutOfRange("steiner_random_solution_bound: n must be >= 4");
    if (alpha < 2 || alpha > n)
        throw ParameterOutOfRange("steiner_random_solution_bound: need 2 <= alpha <= n");

    const double mu = mom.mu();
    const double sigma = mom.sigma();
    const double pairs = 0.5 * static_cast<double>(n) * (n - 1.0);
    const double half_terminals = alpha / 2;  // integer division: floor(alpha/2)

    const double denominator = sigma * pairs - mu * half_terminals;
    if (denominator <= 0.0)
        throw DegenerateBound("steiner_random_solution_bound: nonpositive denominator");

    return (mu * (n - 1.0) + 3.0 * sigma * pairs - 2.0 * mu * half_terminals) / denominator;
}

}  // namespace rfs
