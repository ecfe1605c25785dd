#pragma once

#include <cmath>

#include "rfs/errors.hpp"

namespace rfs {

// Mean and standard deviation of the per-object cost distribution.
// sigma must be strictly positive: the order-statistic bounds collapse and
// the factor-bound denominators degenerate at sigma = 0.
class MomentSpec {
public:
    MomentSpec(double mu, double sigma) : mu_(mu), sigma_(sigma) {
        if (!std::isfinite(mu) || !std::isfinite(sigma))
            throw ParameterOutOfRange("MomentSpec: mu and sigma must be finite");
        if (sigma <= 0.0) throw ParameterOutOfRange("MomentSpec: sigma must be > 0");
    }

    double mu() const { return mu_; }
    double sigma() const { return sigma_; }

private:
    double mu_;
    double sigma_;
};

// Problem shape: k candidate objects, optimal solutions use at least m of
// them, feasible solutions at most ell.
struct ProblemShape {
    int k;
    int m;
    int ell;

    ProblemShape(int k_, int m_, int ell_) : k(k_), m(m_), ell(ell_) {
        if (k < 1) throw ParameterOutOfRange("ProblemShape: k must be >= 1");
        if (m < 1 || m > k) throw ParameterOutOfRange("ProblemShape: need 1 <= m <= k");
        if (ell < 1 || ell > k) throw ParameterOutOfRange("ProblemShape: need 1 <= ell <= k");
    }

    // Both trimmed-sum bounds (and hence the factor bound) apply only when
    // the solution sizes stay below half the object count.
    bool factor_bound_eligible() const { return 2 * m <= k && 2 * (ell - 1) <= k; }
};

// 1-based rank r among k identically distributed values.
struct OrderIndex {
    int r;
    int k;

    OrderIndex(int r_, int k_) : r(r_), k(k_) {
        if (k < 1) throw ParameterOutOfRange("OrderIndex: k must be >= 1");
        if (r < 1 || r > k) throw ParameterOutOfRange("OrderIndex: need 1 <= r <= k");
    }
};

}  // namespace rfs
