#pragma once

#include <stdexcept>
#include <string>

namespace chordlab {

/// Base of every error the library throws. The CLI maps the subclasses onto
/// exit codes (validation 2, numerical 3, missing artifact 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition: wrong dimension, bad parameter, invalid config.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An algorithm did not reach its accuracy contract.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A required intermediate (cached eigenstate, section file) is absent.
class MissingArtifactError : public Error {
 public:
  using Error::Error;
};

/// Cache or export file is unreadable, corrupted, or inconsistent with the request.
class FormatError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractError(message);
}

}  // namespace chordlab
