#pragma once

#include <stdexcept>
#include <string>

namespace latbench {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or parameter value.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver failed to converge within its budget.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Speed too low for a slip-angle or speed-parameterized model.
class DegenerateSpeedError : public Error {
 public:
  using Error::Error;
};

/// Non-finite value produced while integrating.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

class SimulationDiverged : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Too few eligible points to pick setups from.
class SelectionError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration; `field()` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error("config error in field '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace latbench
