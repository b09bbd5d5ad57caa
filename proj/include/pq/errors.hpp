#pragma once

#include <stdexcept>

namespace pq {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live on charts of different dimension.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Density weights do not line up (operator source/target, symbol vs map).
class WeightError : public Error {
public:
  using Error::Error;
};

/// The generic coefficient formulas have a pole at these weights.
/// The message names the special-weight construction that still applies.
class ResonantWeightError : public Error {
public:
  using Error::Error;
};

/// Malformed JSON payload or file.
class SchemaError : public Error {
public:
  using Error::Error;
};

} // namespace pq
