#pragma once

#include <stdexcept>
#include <string>

namespace enriq {

/// Domain error: precondition violated, invariant broken. CLI exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured cap or budget was exceeded; the result is indeterminate,
/// never silently false. CLI exit code 2.
struct CapError : Error {
  using Error::Error;
};

/// Malformed external input (bad JSON, schema violation, unparsable
/// expression). CLI exit code 3.
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace enriq
