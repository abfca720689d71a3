#pragma once

#include <Eigen/Dense>
#include <string>

namespace czdc {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kError };

std::string to_string(LpStatus s);

/**
 * @brief Dense linear program in bounded-variable standard form:
 *     min (or max) objective' x
 *     s.t. eq_lhs x = eq_rhs,  lower <= x <= upper.
 *
 * Bounds may be +/-infinity. eq_lhs may have zero rows.
 */
struct LinearProgram {
  Eigen::VectorXd objective;
  Eigen::MatrixXd eq_lhs;
  Eigen::VectorXd eq_rhs;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  bool maximize{false};

  Eigen::Index num_vars() const { return objective.size(); }
  Eigen::Index num_rows() const { return eq_lhs.rows(); }

  /// @brief LP with m equality rows over n variables in [-1, 1].
  static LinearProgram boxed(Eigen::Index n, Eigen::Index m);
};

struct LpSolution {
  LpStatus status{LpStatus::kError};
  double objective_value{0.0};
  Eigen::VectorXd point;
  int iterations{0};
  /// Residual feasibility gap behind a kInfeasible verdict. Near the
  /// tolerance it flags numerical stall rather than genuine emptiness.
  double infeasibility{0.0};
};

struct LpOptions {
  double tol_feas{1e-9};
  double tol_opt{1e-8};
  /// Pivots between refactorizations of the basis inverse.
  int refactor_period{64};
  /// Hard iteration cap as a multiple of the variable count.
  int max_iter_factor{200};
};

/**
 * @brief Two-phase primal simplex for bounded-variable problems.
 *
 * Pricing starts with the largest reduced-cost rule and falls back to
 * Bland's rule once the iteration count exceeds five times the number of
 * variables, which guarantees termination on degenerate problems. The
 * instance keeps its scratch arrays between calls; it is not thread safe,
 * so use one solver per thread.
 */
class LpSolver {
 public:
  explicit LpSolver(LpOptions options = {});

  LpSolution solve(const LinearProgram& lp);

  const LpOptions& options() const { return options_; }

 private:
  struct Impl;
  LpOptions options_;
};

}  // namespace czdc
