#pragma once

#include <stdexcept>
#include <string>

namespace qdba {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside its physical or probabilistic domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Parameters individually valid but jointly inconsistent (e.g. T1 < T2/2).
class ConstraintError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class SchedulingError : public Error {
 public:
  using Error::Error;
};

// A lieutenant was stepped without every peer's message for an earlier round.
class ProtocolDesyncError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class AggregationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdba
