#include "ngon/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ngon/geometry.hpp"

namespace ngon {

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kPivotEps = 1e-11;
constexpr double kRatioTie = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const LinearProgram& lp) {
  if (lp.num_vars <= 0) throw std::invalid_argument("LinearProgram: num_vars must be positive");
  if (lp.eq_rows.size() != lp.eq_rhs.size() ||
      lp.ineq_rows.size() != lp.ineq_lo.size() ||
      lp.ineq_rows.size() != lp.ineq_hi.size()) {
    throw std::invalid_argument("LinearProgram: row/rhs count mismatch");
  }
  auto check_row = [&](const std::vector<double>& row) {
    if (static_cast<int>(row.size()) != lp.num_vars) {
      throw std::invalid_argument("LinearProgram: row width != num_vars");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("LinearProgram: non-finite coefficient");
    }
  };
  for (const auto& r : lp.eq_rows) check_row(r);
  for (double b : lp.eq_rhs) {
    if (!std::isfinite(b)) throw std::invalid_argument("LinearProgram: non-finite rhs");
  }
  for (std::size_t i = 0; i < lp.ineq_rows.size(); ++i) {
    check_row(lp.ineq_rows[i]);
    if (std::isnan(lp.ineq_lo[i]) || std::isnan(lp.ineq_hi[i]) ||
        lp.ineq_lo[i] > lp.ineq_hi[i]) {
      throw std::invalid_argument("LinearProgram: invalid inequality bounds");
    }
  }
}

// One single-sided row of the standard-form system: row . x (kind) rhs,
// kind -1 for >=, 0 for ==, +1 for <=.
struct StdRow {
  const std::vector<double>* coeffs;
  double rhs;
  int kind;
};

}  // namespace

double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
  double worst = 0.0;
  auto dot = [&](const std::vector<double>& row) {
    double s = 0.0;
    for (int j = 0; j < lp.num_vars; ++j) s += row[j] * x[j];
    return s;
  };
  for (std::size_t r = 0; r < lp.eq_rows.size(); ++r) {
    worst = std::max(worst, std::abs(dot(lp.eq_rows[r]) - lp.eq_rhs[r]));
  }
  for (std::size_t r = 0; r < lp.ineq_rows.size(); ++r) {
    const double v = dot(lp.ineq_rows[r]);
    if (lp.ineq_lo[r] > -kInf) worst = std::max(worst, lp.ineq_lo[r] - v);
    if (lp.ineq_hi[r] < kInf) worst = std::max(worst, v - lp.ineq_hi[r]);
  }
  return worst;
}

FeasibilityResult solve_feasibility(const LinearProgram& lp) {
  validate(lp);

  std::vector<StdRow> rows;
  rows.reserve(lp.eq_rows.size() + 2 * lp.ineq_rows.size());
  for (std::size_t r = 0; r < lp.eq_rows.size(); ++r) {
    rows.push_back({&lp.eq_rows[r], lp.eq_rhs[r], 0});
  }
  for (std::size_t r = 0; r < lp.ineq_rows.size(); ++r) {
    if (lp.ineq_lo[r] > -kInf) rows.push_back({&lp.ineq_rows[r], lp.ineq_lo[r], -1});
    if (lp.ineq_hi[r] < kInf) rows.push_back({&lp.ineq_rows[r], lp.ineq_hi[r], +1});
  }

  const int nv = lp.num_vars;
  const int m = static_cast<int>(rows.size());
  int n_slack = 0;
  for (const StdRow& r : rows) {
    if (r.kind != 0) ++n_slack;
  }
  // Columns: x+ | x- | slacks | artificials, then the rhs.
  const int n_struct = 2 * nv + n_slack;
  const int total = n_struct + m;
  std::vector<std::vector<double>> t(m, std::vector<double>(total + 1, 0.0));
  std::vector<int> basis(m);

  int slack = 0;
  for (int i = 0; i < m; ++i) {
    const StdRow& r = rows[i];
    double sign = r.rhs < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < nv; ++j) {
      t[i][j] = sign * (*r.coeffs)[j];
      t[i][nv + j] = -sign * (*r.coeffs)[j];
    }
    if (r.kind != 0) {
      t[i][2 * nv + slack] = sign * (r.kind == +1 ? 1.0 : -1.0);
      ++slack;
    }
    t[i][n_struct + i] = 1.0;
    t[i][total] = sign * r.rhs;
    basis[i] = n_struct + i;
  }

  // Reduced-cost row for min(sum of artificials); artificial columns start
  // at zero reduced cost, structural columns at -(column sum).
  std::vector<double> d(total, 0.0);
  for (int j = 0; j < n_struct; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += t[i][j];
    d[j] = -s;
  }

  for (int iter = 0;; ++iter) {
    if (iter > kMaxIterations) {
      throw LpError("solve_feasibility: phase-1 exceeded the 10000-iteration cap");
    }
    int enter = -1;
    for (int j = 0; j < total; ++j) {
      if (d[j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double best = kInf;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] > kPivotEps) {
        const double ratio = t[i][total] / t[i][enter];
        if (ratio < best - kRatioTie ||
            (ratio <= best + kRatioTie && (leave < 0 || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) {
      throw LpError("solve_feasibility: phase-1 column unbounded (numerical breakdown)");
    }

    const double piv = t[leave][enter];
    for (int j = 0; j <= total; ++j) t[leave][j] /= piv;
    t[leave][enter] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
      t[i][enter] = 0.0;
    }
    const double fd = d[enter];
    if (fd != 0.0) {
      for (int j = 0; j < total; ++j) d[j] -= fd * t[leave][j];
      d[enter] = 0.0;
    }
    basis[leave] = enter;
  }

  double phase1 = 0.0;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n_struct) phase1 += t[i][total];
  }

  if (phase1 <= tol::kLpFeasible) {
    std::vector<double> y(n_struct, 0.0);
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n_struct) y[basis[i]] = t[i][total];
    }
    std::vector<double> x(nv);
    for (int j = 0; j < nv; ++j) x[j] = y[j] - y[nv + j];
    const double residual = max_violation(lp, x);
    if (residual > tol::kLpFeasible) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "solve_feasibility: extracted point violates constraints by "
                    "%.3e (> feasible threshold 1e-9)", residual);
      throw LpError(buf);
    }
    return {Feasibility::feasible, std::move(x), residual};
  }
  if (phase1 >= tol::kLpInfeasible) {
    return {Feasibility::infeasible, std::nullopt, phase1};
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "solve_feasibility: phase-1 optimum %.3e lies between the feasible "
                "(1e-9) and infeasible (1e-7) thresholds", phase1);
  throw LpError(buf);
}

}  // namespace ngon
