#pragma once

#include <stdexcept>
#include <string>

namespace rfs {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct ParameterOutOfRange : Error {
    using Error::Error;
};

// A bound's denominator is zero or has the wrong sign, so the formula is undefined.
struct DegenerateBound : Error {
    using Error::Error;
};

struct ConnectivityUnreachable : Error {
    using Error::Error;
};

struct GraphDisconnected : Error {
    using Error::Error;
};

struct NegativeWeight : Error {
    using Error::Error;
};

struct InstanceTooLarge : Error {
    using Error::Error;
};

struct DenominatorNearZero : Error {
    using Error::Error;
};

struct ConfigInvalid : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

}  // namespace rfs
