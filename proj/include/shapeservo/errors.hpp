#pragma once

#include <stdexcept>
#include <string>

namespace shapeservo {

// Normal-equation matrix is numerically rank deficient (condition number
// above the 1e12 threshold), typically from over-parameterized fits.
struct singular_fit_error : std::runtime_error {
  explicit singular_fit_error(const std::string& what) : std::runtime_error(what) {}
};

// A local MLS solve has fewer support nodes than unknowns.
struct support_coverage_error : std::runtime_error {
  support_coverage_error(const std::string& what, double parameter)
      : std::runtime_error(what), offending_parameter(parameter) {}
  double offending_parameter;
};

// Quasi-static relaxation failed to reach the displacement tolerance.
struct settle_failure : std::runtime_error {
  settle_failure(const std::string& what, int iterations, double last_displacement)
      : std::runtime_error(what), iterations(iterations), last_displacement(last_displacement) {}
  int iterations;
  double last_displacement;
};

// QP solver hit the iteration cap before reaching tolerance.
struct solver_failure : std::runtime_error {
  solver_failure(const std::string& what, double primal_residual, double dual_residual)
      : std::runtime_error(what), primal_residual(primal_residual), dual_residual(dual_residual) {}
  double primal_residual;
  double dual_residual;
};

// RTM update produced a higher objective than the zero increment.
struct estimator_error : std::runtime_error {
  estimator_error(const std::string& what, double objective_at_zero, double objective_at_result)
      : std::runtime_error(what),
        objective_at_zero(objective_at_zero),
        objective_at_result(objective_at_result) {}
  double objective_at_zero;
  double objective_at_result;
};

// Dimension or type mismatch between pipeline stages.
struct contract_error : std::runtime_error {
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// MPC asked to plan from a position outside the workspace box.
struct infeasible_start_error : std::runtime_error {
  explicit infeasible_start_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shapeservo
