#pragma once

#include <stdexcept>
#include <string>

namespace ftqc {

// Invalid input: out-of-domain parameters, malformed scenario files.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A well-formed request that no configuration in the search space satisfies.
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// No code distance (or distance pair) in the scanned grid meets the error budget.
class CalibrationInfeasible : public InfeasibleError {
  public:
    using InfeasibleError::InfeasibleError;
};

// Even the most parallel configuration cannot reach the requested runtime.
class TargetUnreachable : public InfeasibleError {
  public:
    using InfeasibleError::InfeasibleError;
};

// Even the smallest configuration exceeds the qubit budget.
class BudgetTooSmall : public InfeasibleError {
  public:
    using InfeasibleError::InfeasibleError;
};

class UnitCountOutOfRange : public InfeasibleError {
  public:
    using InfeasibleError::InfeasibleError;
};

class FactoryCountOutOfRange : public InfeasibleError {
  public:
    using InfeasibleError::InfeasibleError;
};

// The distance <-> cycle-count iteration failed to settle.
class FixedPointDivergence : public InfeasibleError {
  public:
    using InfeasibleError::InfeasibleError;
};

}  // namespace ftqc
