#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soilpv {

// Argument outside an operation's domain (negative irradiance, duty > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested buck operating point needs a step-up (vout > vin).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sub-operation failed while advancing the simulation.
class StepError : public std::runtime_error {
 public:
  StepError(std::size_t step_index, const std::string& what)
      : std::runtime_error("step " + std::to_string(step_index) + ": " + what),
        step_index_(step_index) {}

  std::size_t step_index() const noexcept { return step_index_; }

 private:
  std::size_t step_index_;
};

}  // namespace soilpv
