#pragma once

#include <stdexcept>

namespace swarmconn {

/// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix handed to a spectral routine is not symmetric within tolerance.
class NotSymmetricError : public Error {
public:
    using Error::Error;
};

/// Operation requires a connected graph.
class DisconnectedError : public Error {
public:
    using Error::Error;
};

/// Tabulated weight profile queried outside its sampled range.
class OutOfDomainError : public Error {
public:
    using Error::Error;
};

/// Pairwise operation on two agents that do not share an edge.
class NotNeighborsError : public Error {
public:
    using Error::Error;
};

/// Agent position at or beyond the working-ball boundary.
class OutsideDomainError : public Error {
public:
    using Error::Error;
};

/// A numeric check was invoked with inputs violating its stated preconditions.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// Integration produced non-finite or absurdly large coordinates.
class NumericalBlowupError : public Error {
public:
    using Error::Error;
};

/// Scenario text that cannot be parsed or violates the schema.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Structurally well-formed configuration that breaks a hard run invariant.
class ConfigInvalidError : public Error {
public:
    using Error::Error;
};

}  // namespace swarmconn
