#include "rfs/distributions.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "rfs/errors.hpp"
#include "rfs/text.hpp"

namespace rfs {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = text.find(sep);
        if (pos == std::string_view::npos) {
            parts.push_back(text);
            return parts;
        }
        parts.push_back(text.substr(0, pos));
        text.remove_prefix(pos + 1);
    }
}

}  // namespace

DistributionSpec DistributionSpec::uniform(double a, double b) {
    if (!(a < b)) throw ParameterOutOfRange("uniform distribution requires a < b");
    return {Family::uniform, a, b};
}

DistributionSpec DistributionSpec::normal(double mu, double sigma) {
    if (!(sigma > 0.0)) throw ParameterOutOfRange("normal distribution requires sigma > 0");
    return {Family::normal, mu, sigma};
}

DistributionSpec DistributionSpec::exponential(double lambda) {
    if (!(lambda > 0.0)) throw ParameterOutOfRange("exponential distribution requires lambda > 0");
    return {Family::exponential, lambda, 0.0};
}

DistributionSpec DistributionSpec::half_normal(double sigma) {
    if (!(sigma > 0.0)) throw ParameterOutOfRange("half-normal distribution requires sigma > 0");
    return {Family::half_normal, sigma, 0.0};
}

DistributionSpec DistributionSpec::parse(std::string_view id) {
    const auto parts = split(trim(id), ':');
    const std::string_view name = parts[0];
    try {
        if (name == "uniform" && parts.size() == 3)
            return uniform(parse_double(parts[1]), parse_double(parts[2]));
        if (name == "normal" && parts.size() == 3)
            return normal(parse_double(parts[1]), parse_double(parts[2]));
        if (name == "exp" && parts.size() == 2) return exponential(parse_double(parts[1]));
        if (name == "halfnormal" && parts.size() == 2) return half_normal(parse_double(parts[1]));
    } catch (const ParameterOutOfRange& e) {
        throw ConfigInvalid(std::string("bad distribution parameters: ") + e.what());
    }
    throw ConfigInvalid("unknown distribution spec: '" + std::string(id) + "'");
}

double DistributionSpec::mean() const {
    switch (family_) {
        case Family::uniform: return 0.5 * (p0_ + p1_);
        case Family::normal: return p0_;
        case Family::exponential: return 1.0 / p0_;
        case Family::half_normal: return p0_ * std::sqrt(2.0 / std::numbers::pi);
    }
    return 0.0;
}

double DistributionSpec::stddev() const {
    switch (family_) {
        case Family::uniform: return (p1_ - p0_) / std::sqrt(12.0);
        case Family::normal: return p1_;
        case Family::exponential: return 1.0 / p0_;
        case Family::half_normal: return p0_ * std::sqrt(1.0 - 2.0 / std::numbers::pi);
    }
    return 0.0;
}

bool DistributionSpec::nonnegative_support() const {
    switch (family_) {
        case Family::uniform: return p0_ >= 0.0;
        case Family::normal: return false;
        case Family::exponential: return true;
        case Family::half_normal: return true;
    }
    return false;
}

double DistributionSpec::sample(RandomStream& stream) const {
    switch (family_) {
        case Family::uniform: return p0_ + (p1_ - p0_) * stream.next_unit();
        case Family::normal: return p0_ + p1_ * stream.next_normal();
        case Family::exponential: return stream.next_exponential(p0_);
        case Family::half_normal: return p0_ * std::abs(stream.next_normal());
    }
    return 0.0;
}

std::string DistributionSpec::id() const {
    switch (family_) {
        case Family::uniform:
            return "uniform:" + format_double(p0_) + ":" + format_double(p1_);
        case Family::normal:
            return "normal:" + format_double(p0_) + ":" + format_double(p1_);
        case Family::exponential: return "exp:" + format_double(p0_);
        case Family::half_normal: return "halfnormal:" + format_double(p0_);
    }
    return {};
}

}  // namespace rfs
