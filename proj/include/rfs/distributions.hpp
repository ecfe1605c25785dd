#pragma once

#include <string>
#include <string_view>

#include "rfs/moments.hpp"
#include "rfs/rng.hpp"

namespace rfs {

// A weight distribution family with validated parameters, analytic moments,
// and a deterministic sampler. Identified by a compact string such as
// "uniform:0:1", "normal:0:1", "exp:1", or "halfnormal:1" (round-trips
// through parse()).
class DistributionSpec {
public:
    enum class Family { uniform, normal, exponential, half_normal };

    static DistributionSpec uniform(double a, double b);
    static DistributionSpec normal(double mu, double sigma);
    static DistributionSpec exponential(double lambda);
    static DistributionSpec half_normal(double sigma);

    static DistributionSpec parse(std::string_view id);

    Family family() const { return family_; }
    double mean() const;
    double stddev() const;
    MomentSpec moments() const { return {mean(), stddev()}; }

    // True for the families that are symmetric about their mean; the
    // order-statistic bounds assume symmetry.
    bool symmetric() const { return family_ == Family::uniform || family_ == Family::normal; }

    // True when no draw can be negative; cost-ratio experiments require it.
    bool nonnegative_support() const;

    double sample(RandomStream& stream) const;

    std::string id() const;

private:
    DistributionSpec(Family family, double p0, double p1) : family_(family), p0_(p0), p1_(p1) {}

    Family family_;
    double p0_;
    double p1_;
};

}  // namespace rfs
