#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace smhd {

/// Invalid grid, field or configuration input.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Field shape or tag mismatch at an operator boundary.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inadmissible physical state (rho <= 0, non-finite values).
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Iterative solver failure; carries the residual history.
struct SolverError : std::runtime_error {
  SolverError(const std::string& what, std::vector<double> hist)
      : std::runtime_error(what), history(std::move(hist)) {}
  std::vector<double> history;
};

}  // namespace smhd
