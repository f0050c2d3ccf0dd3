#ifndef REMOTAL_ERRORS_HPP
#define REMOTAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace remotal {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an input value failed (non-finite term, empty set, bad
/// parameter). The message names the offending index or key where one exists.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A window enumeration would exceed the configured element cap.
class HorizonExceededError : public Error {
 public:
  using Error::Error;
};

/// A vertex or grid enumeration is not feasible at the requested dimension.
class DimensionCapError : public Error {
 public:
  using Error::Error;
};

/// A supplied subset H is not contained in the ambient set E.
class InvalidSubsetError : public Error {
 public:
  using Error::Error;
};

/// A continuity witness probe is eventually constant within the horizon.
class InvalidWitnessError : public Error {
 public:
  using Error::Error;
};

/// A closed-form count certificate disagrees with direct enumeration.
class CertificateMismatchError : public Error {
 public:
  using Error::Error;
};

/// A config document is malformed; the message carries the failing key path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace remotal

#endif  // REMOTAL_ERRORS_HPP
