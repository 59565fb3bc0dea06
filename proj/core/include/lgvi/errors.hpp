#pragma once

#include <stdexcept>
#include <string>

namespace lgvi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument left the local-diffeomorphism neighborhood of a retraction
// (log at angle pi, skew-sqrt at |xi| >= limit, step-size guard tripped).
struct OutOfDomain : Error {
  using Error::Error;
};

// Operation not defined for the requested group (e.g. skew-sqrt on SE(3)).
struct UnsupportedGroup : Error {
  using Error::Error;
};

struct Singular : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct GroupMismatch : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ReferenceUnconverged : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace lgvi
