#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace linedg {

/// Raised when a fluid state leaves the physical regime (rho <= 0 or p <= 0).
class physical_state_error : public std::runtime_error {
 public:
  physical_state_error(const std::string& what, std::vector<double> state)
      : std::runtime_error(what), state_(std::move(state)) {}
  const std::vector<double>& state() const { return state_; }

 private:
  std::vector<double> state_;
};

/// Bad run configuration (missing boundary condition, inconsistent options).
class config_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Nonlinear or linear solver failure (divergence, blow-up, breakdown).
class solver_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace linedg
