#pragma once

#include <stdexcept>
#include <string>

namespace heis {

// Coordinate left the 64-bit safe range (|x|,|y| <= 2^30, |z| <= 2^60).
class CoordinateOverflow : public std::runtime_error {
 public:
  explicit CoordinateOverflow(const std::string& what)
      : std::runtime_error(what) {}
};

// A BFS or solver would exceed the configured memory budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// A grid-representation evaluation would shift support out of the window.
class MarginExceeded : public std::runtime_error {
 public:
  explicit MarginExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// Iterative solver hit its cap; carries the last residual.
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace heis
