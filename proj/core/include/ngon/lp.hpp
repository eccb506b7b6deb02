#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace ngon {

/// Feasibility problem over free real variables:
///   eq_rows[r] . x == eq_rhs[r]
///   ineq_lo[r] <= ineq_rows[r] . x <= ineq_hi[r]
/// A bound of +-infinity drops that side.
struct LinearProgram {
  int num_vars = 0;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;
  std::vector<std::vector<double>> ineq_rows;
  std::vector<double> ineq_lo;
  std::vector<double> ineq_hi;
};

enum class Feasibility { feasible, infeasible };

struct FeasibilityResult {
  Feasibility verdict = Feasibility::infeasible;
  /// Present iff feasible; then the max constraint violation is <= 1e-9.
  std::optional<std::vector<double>> point;
  /// Max violation of the returned point when feasible, else the certified
  /// phase-1 optimum (total residual that cannot be removed).
  double residual = 0.0;
};

/// Numerically ambiguous verdict (phase-1 optimum in the dead zone between
/// the feasible and infeasible thresholds) or iteration cap exceeded.
class LpError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Phase-1 simplex on a dense tableau with Bland's smallest-index
/// anti-cycling rule. Feasible when the phase-1 optimum is <= 1e-9,
/// infeasible when >= 1e-7; anything between throws LpError.
FeasibilityResult solve_feasibility(const LinearProgram& lp);

/// Max violation of the program's constraints at x (reported as residual).
double max_violation(const LinearProgram& lp, const std::vector<double>& x);

}  // namespace ngon
