#pragma once

#include <stdexcept>
#include <string>

namespace efg {

// Bad user-supplied configuration (unknown game, malformed config file, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An API precondition was violated by calling code.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Evaluation could not proceed (e.g. a profile missing an infoset entry).
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Training diverged (non-finite loss or parameters).
struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_contract(bool cond, const std::string& msg) {
  if (!cond) throw ContractViolation(msg);
}

}  // namespace efg
