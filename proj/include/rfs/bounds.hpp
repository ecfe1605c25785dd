#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rfs/moments.hpp"

namespace rfs {

struct Bounds {
    double lower;
    double upper;
};

// Case of the piecewise expected-approximation-factor bound, keyed on the
// sign of the lower bound for E[Y*] (the best-case trimmed sum).
enum class BoundCase {
    negative_denominator,  // E[Y*] lower bound < 0
    positive_denominator,  // E[Y*] lower bound > 0
    degenerate,            // E[Y*] lower bound exactly 0; the factor is unbounded
};

// A simplified constant that the factor bound is guaranteed not to exceed
// under a side condition (recorded in BoundReport::notes).
struct Simplification {
    enum class Kind { two, three, four, epsilon_ge2, epsilon_ge_k };
    Kind kind;
    double epsilon = 0.0;  // meaningful for the epsilon kinds only
};

struct BoundReport {
    BoundCase case_id = BoundCase::degenerate;
    // Factor bound evaluated with the un-relaxed trimmed-sum expressions.
    // Unset when degenerate or when the trimmed-sum bounds cross (upper
    // bound for E[Y] below lower bound for E[Y*]), where the expression no
    // longer bounds anything.
    std::optional<double> exact_value;
    // Relaxed closed form; unset when its denominator has the wrong sign.
    std::optional<double> relaxed_value;
    std::vector<Simplification> simplifications;
    std::vector<std::string> notes;

    bool has(Simplification::Kind kind) const;
    std::optional<double> epsilon_of(Simplification::Kind kind) const;
};

// Sum_{i=1..n} 1/sqrt(i), summed directly in ascending i.
double harmonic_half(int n);

// Sandwich for harmonic_half(n): (2*sqrt(n+1) - 2, 2*sqrt(n) - 1].
// The lower bound is strict, the upper bound inclusive (attained at n = 1).
Bounds harmonic_half_bounds(int n);

// Interval containing E[X_(r:k)] for any symmetric distribution with the
// given moments. Branches switch at r/k = 1/2 (lower) and (r-1)/k = 1/2
// (upper); at the boundary both formulas coincide.
Bounds order_stat_expectation_bounds(OrderIndex idx, const MomentSpec& mom);

// Strict lower bound on E[Y*], the expected sum of the m smallest of k
// values: m*mu - sigma*sqrt(2k)*(sqrt(m+1) - 1). Requires 2m <= k.
double trimmed_min_sum_lower_bound(const ProblemShape& shape, const MomentSpec& mom);

// Upper bound on E[Y], the expected sum of the ell largest of k values:
// ell*mu + (sigma*sqrt(2k)/2)*(2*sqrt(ell) - 1). Requires 2(ell-1) <= k.
double trimmed_max_sum_upper_bound(const ProblemShape& shape, const MomentSpec& mom);

// Piecewise upper bound on the expected approximation factor
// 1 + |E[Y] - E[Y*]| / |E[Y*]| of a random feasible solution, evaluated
// from the trimmed-sum bounds, together with every simplified constant
// whose side condition holds. Requires shape.factor_bound_eligible().
BoundReport approx_factor_bound(const ProblemShape& shape, const MomentSpec& mom);

// True when ell is large enough relative to m (and mu above the case
// threshold, m <= ell <= k/2) that the positive-case bound simplifies to 3.
bool simplifies_to_three(const ProblemShape& shape, const MomentSpec& mom);

// Closed-form factor bound for random spanning-tree solutions to the
// Steiner network problem on n vertices with alpha terminals:
//   (mu*(n-1) + 3*sigma*C(n,2) - 2*mu*floor(alpha/2))
//   / (sigma*C(n,2) - mu*floor(alpha/2)).
// Decreases toward 3 as n grows. Requires n >= 4, 2 <= alpha <= n, and a
// positive denominator.
double steiner_random_solution_bound(int n, int alpha, const MomentSpec& mom);

}  // namespace rfs
