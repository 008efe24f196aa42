#pragma once

#include <string>
#include <utility>
#include <vector>

namespace steiner {

enum class RowSense { LessEq, GreaterEq, Equal };

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

/// Sparse statement of a linear program with per-variable bounds.
/// Minimization only; upper bounds may be +infinity, lower bounds must be
/// finite (every variable in this project is nonnegative).
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, double>> coeffs;
    RowSense sense = RowSense::LessEq;
    double rhs = 0.0;
    std::string name;
  };

  std::vector<double> lower, upper, objective;
  std::vector<std::string> names;
  std::vector<Row> rows;

  int add_variable(std::string name, double lo, double up, double obj);
  int add_row(Row row);
  int variable_count() const { return static_cast<int>(lower.size()); }
  int row_count() const { return static_cast<int>(rows.size()); }
};

/// Result of a solve. `primal_residual` / `dual_residual` are the maximum
/// constraint and optimality violations at the returned point; `duality_gap`
/// compares the primal objective with the dual objective reconstructed from
/// the final reduced costs. All three should sit well below 1e-9 on the
/// desk-scale models this project builds.
struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> x;
  double objective = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double duality_gap = 0.0;
  int iterations = 0;
};

/// Dense two-phase bounded-variable simplex. Deterministic: Dantzig pricing
/// with fixed tie-breaking, switching to Bland's rule after a degenerate
/// stall, so a fixed model always yields the same vertex.
LpSolution solve_simplex(const LinearProgram& lp);

/// CPLEX LP-format text, for cross-checking models with external solvers.
std::string to_lp_format(const LinearProgram& lp);

}  // namespace steiner
