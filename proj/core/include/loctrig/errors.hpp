#pragma once

#include <stdexcept>
#include <string>

namespace loctrig {

/// Precondition violated by the caller (bad degree, mismatched lengths, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data admits no meaningful answer (e.g. zero spread for an embedding).
class DegenerateData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The normalized estimator was asked for a value where the density
/// estimate is not positive, i.e. away from the support of the data.
class UndefinedPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative numerics (quadrature refinement, ...) did not converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or malformed input file.
class DataFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace loctrig
