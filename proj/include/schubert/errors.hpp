#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Raised for malformed inputs: bad ranks, out-of-range letters, unparsable
/// element words. The CLI maps this to exit status 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two elements that must live in the same Weyl group do not.
class DiagramMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A word handed in as reduced is not reduced for the element it names.
class NotReduced : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Internal consistency failure. Seeing one of these means a bug upstream
/// (e.g. a GKM solve whose division is not exact).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonExactDivision : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace schubert
