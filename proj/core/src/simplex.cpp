#include "steiner/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace steiner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCostTol = 1e-9;   // reduced-cost optimality tolerance
constexpr double kPivotTol = 1e-9;  // minimum admissible pivot magnitude
constexpr double kPhase1Tol = 1e-7;

enum class VarState : char { Basic, AtLower, AtUpper };

struct Tableau {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // rows x cols, row-major
  double* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
  const double* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }
};

struct Solver {
  const LinearProgram& lp;
  int n_struct;
  int n_cols = 0;
  Tableau t;
  std::vector<double> lo, up, cost;     // per column
  std::vector<double> rho;              // B^-1 * b (kept for refreshes)
  std::vector<double> beta;             // values of basic variables
  std::vector<double> d;                // reduced costs
  std::vector<int> basis;               // row -> column
  std::vector<VarState> state;          // per column
  std::vector<double> value;            // per column, only meaningful nonbasic
  std::vector<int> slack_col;           // row -> slack column or -1
  std::vector<int> art_col;             // row -> artificial column or -1
  std::vector<double> rhs_std;          // standardized rhs (after row flips)
  std::vector<char> flipped;            // row multiplied by -1
  bool bland = false;
  int iterations = 0;
  int stall = 0;

  explicit Solver(const LinearProgram& p) : lp(p), n_struct(p.variable_count()) {}

  void build() {
    const int m = lp.row_count();
    slack_col.assign(m, -1);
    art_col.assign(m, -1);
    rhs_std.assign(m, 0.0);
    flipped.assign(m, 0);

    // columns: structural, then slacks, then artificials
    lo = lp.lower;
    up = lp.upper;
    cost.assign(n_struct, 0.0);
    for (int j = 0; j < n_struct; ++j) {
      if (!(lo[j] > -kInf)) throw std::invalid_argument("simplex requires finite lower bounds");
    }
    int n_slack = 0;
    for (const auto& r : lp.rows) {
      if (r.sense != RowSense::Equal) ++n_slack;
    }
    // residuals at the all-lower-bound point decide which rows need an
    // artificial; count first so the tableau is allocated once
    std::vector<double> resid(m, 0.0);
    for (int i = 0; i < m; ++i) {
      const auto& r = lp.rows[i];
      double ax = 0.0;
      for (const auto& [j, c] : r.coeffs) ax += c * lp.lower[j];
      double rhs = r.rhs;
      double sgn = 1.0;
      if (r.sense == RowSense::GreaterEq) sgn = -1.0;  // flip GE to LE
      resid[i] = sgn * rhs - sgn * ax;
    }
    int n_art = 0;
    for (int i = 0; i < m; ++i) {
      const auto& r = lp.rows[i];
      if (r.sense == RowSense::Equal || resid[i] < 0.0) ++n_art;
    }

    n_cols = n_struct + n_slack + n_art;
    t.rows = m;
    t.cols = n_cols;
    t.a.assign(static_cast<size_t>(m) * n_cols, 0.0);
    lo.resize(n_cols, 0.0);
    up.resize(n_cols, kInf);
    cost.resize(n_cols, 0.0);

    int next_slack = n_struct;
    int next_art = n_struct + n_slack;
    basis.assign(m, -1);
    for (int i = 0; i < m; ++i) {
      const auto& r = lp.rows[i];
      double sgn = r.sense == RowSense::GreaterEq ? -1.0 : 1.0;
      double rhs = sgn * r.rhs;
      double* row = t.row(i);
      for (const auto& [j, c] : r.coeffs) row[j] += sgn * c;
      if (r.sense != RowSense::Equal) {
        slack_col[i] = next_slack++;
        row[slack_col[i]] = 1.0;
      }
      // make the starting residual nonnegative so the basic column is +1
      if (resid[i] < 0.0) {
        flipped[i] = 1;
        rhs = -rhs;
        for (int j = 0; j < n_cols; ++j) row[j] = -row[j];
        resid[i] = -resid[i];
      }
      rhs_std[i] = rhs;
      if (r.sense == RowSense::Equal || flipped[i]) {
        art_col[i] = next_art++;
        row[art_col[i]] = 1.0;
        basis[i] = art_col[i];
      } else {
        basis[i] = slack_col[i];
      }
    }

    state.assign(n_cols, VarState::AtLower);
    value.assign(n_cols, 0.0);
    for (int j = 0; j < n_cols; ++j) value[j] = lo[j];
    for (int i = 0; i < m; ++i) state[basis[i]] = VarState::Basic;

    rho = rhs_std;
    refresh_beta();
    d.assign(n_cols, 0.0);
    iterations = 0;
  }

  // beta_i = rho_i - sum over nonbasic columns of D[i][j] * value_j
  void refresh_beta() {
    const int m = t.rows;
    beta = rho;
    for (int j = 0; j < n_cols; ++j) {
      if (state[j] == VarState::Basic) continue;
      const double v = value[j];
      if (v == 0.0) continue;
      for (int i = 0; i < m; ++i) beta[i] -= t.row(i)[j] * v;
    }
  }

  void compute_reduced_costs(const std::vector<double>& c) {
    const int m = t.rows;
    d = c;
    for (int i = 0; i < m; ++i) {
      const double cb = c[basis[i]];
      if (cb == 0.0) continue;
      const double* row = t.row(i);
      for (int j = 0; j < n_cols; ++j) d[j] -= cb * row[j];
    }
  }

  int pick_entering() const {
    int best = -1;
    double best_score = kCostTol;
    for (int j = 0; j < n_cols; ++j) {
      if (state[j] == VarState::Basic) continue;
      double score = 0.0;
      if (state[j] == VarState::AtLower && d[j] < -kCostTol) score = -d[j];
      if (state[j] == VarState::AtUpper && d[j] > kCostTol) score = d[j];
      if (score <= 0.0) continue;
      if (bland) return j;  // smallest index with a violation
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  LpStatus iterate(int max_iterations) {
    const int m = t.rows;
    while (true) {
      if (iterations >= max_iterations) return LpStatus::IterationLimit;
      const int j = pick_entering();
      if (j < 0) return LpStatus::Optimal;
      ++iterations;
      const double sigma = state[j] == VarState::AtLower ? 1.0 : -1.0;

      // ratio test: entering moves by t >= 0 in direction sigma
      double t_best = up[j] - lo[j];  // own bound flip
      int leave_row = -1;
      bool leave_at_upper = false;
      for (int i = 0; i < m; ++i) {
        const double rate = -sigma * t.row(i)[j];  // d(beta_i)/dt
        if (rate < -kPivotTol) {
          const double lb = lo[basis[i]];
          if (lb > -kInf) {
            const double ti = (beta[i] - lb) / (-rate);
            if (ti < t_best - 1e-12) {
              t_best = ti;
              leave_row = i;
              leave_at_upper = false;
            }
          }
        } else if (rate > kPivotTol) {
          const double ub = up[basis[i]];
          if (ub < kInf) {
            const double ti = (ub - beta[i]) / rate;
            if (ti < t_best - 1e-12) {
              t_best = ti;
              leave_row = i;
              leave_at_upper = true;
            }
          }
        }
      }
      if (t_best == kInf && leave_row < 0) return LpStatus::Unbounded;

      // among rows tying the minimum ratio choose the most stable pivot
      // (largest magnitude), then the smallest row; Bland mode picks the
      // smallest leaving variable index for guaranteed termination
      if (leave_row >= 0) {
        const double tie = t_best + 1e-9 * (1.0 + std::abs(t_best));
        double best_piv = std::abs(t.row(leave_row)[j]);
        for (int i = 0; i < m; ++i) {
          if (i == leave_row) continue;
          const double rate = -sigma * t.row(i)[j];
          double ti, at_upper;
          if (rate < -kPivotTol && lo[basis[i]] > -kInf) {
            ti = (beta[i] - lo[basis[i]]) / (-rate);
            at_upper = false;
          } else if (rate > kPivotTol && up[basis[i]] < kInf) {
            ti = (up[basis[i]] - beta[i]) / rate;
            at_upper = true;
          } else {
            continue;
          }
          if (ti > tie) continue;
          const double piv = std::abs(t.row(i)[j]);
          const bool better = bland ? basis[i] < basis[leave_row]
                                    : (piv > best_piv + 1e-12 ||
                                       (std::abs(piv - best_piv) <= 1e-12 && i < leave_row));
          if (better) {
            leave_row = i;
            leave_at_upper = at_upper;
            best_piv = piv;
            t_best = std::min(t_best, ti);
          }
        }
      }
      if (t_best < 0.0) t_best = 0.0;

      if (t_best < 1e-12) {
        if (++stall > 2 * (m + n_cols)) bland = true;
      } else {
        stall = 0;
      }

      if (leave_row < 0) {
        // bound flip: no basis change
        const double delta = sigma * t_best;
        for (int i = 0; i < m; ++i) beta[i] -= t.row(i)[j] * delta;
        value[j] += delta;
        state[j] = state[j] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
        continue;
      }

      // move basic values, then pivot
      const double delta = sigma * t_best;
      for (int i = 0; i < m; ++i) {
        if (i != leave_row) beta[i] -= t.row(i)[j] * delta;
      }
      const int leaving = basis[leave_row];
      state[leaving] = leave_at_upper ? VarState::AtUpper : VarState::AtLower;
      value[leaving] = leave_at_upper ? up[leaving] : lo[leaving];

      const double entering_value = value[j] + delta;
      basis[leave_row] = j;
      state[j] = VarState::Basic;
      beta[leave_row] = entering_value;

      // eliminate column j everywhere
      double* prow = t.row(leave_row);
      const double inv = 1.0 / prow[j];
      for (int c = 0; c < n_cols; ++c) prow[c] *= inv;
      rho[leave_row] *= inv;
      prow[j] = 1.0;
      for (int i = 0; i < m; ++i) {
        if (i == leave_row) continue;
        double* row = t.row(i);
        const double f = row[j];
        if (f == 0.0) continue;
        for (int c = 0; c < n_cols; ++c) row[c] -= f * prow[c];
        row[j] = 0.0;
        rho[i] -= f * rho[leave_row];
      }
      const double dj = d[j];
      if (dj != 0.0) {
        for (int c = 0; c < n_cols; ++c) d[c] -= dj * prow[c];
        d[j] = 0.0;
      }
    }
  }

  double objective_at_current(const std::vector<double>& c) const {
    double obj = 0.0;
    for (int j = 0; j < n_cols; ++j) {
      if (state[j] != VarState::Basic && c[j] != 0.0) obj += c[j] * value[j];
    }
    for (int i = 0; i < t.rows; ++i) obj += c[basis[i]] * beta[i];
    return obj;
  }
};

}  // namespace

int LinearProgram::add_variable(std::string name, double lo, double up, double obj) {
  names.push_back(std::move(name));
  lower.push_back(lo);
  upper.push_back(up);
  objective.push_back(obj);
  return static_cast<int>(lower.size()) - 1;
}

int LinearProgram::add_row(Row row) {
  rows.push_back(std::move(row));
  return static_cast<int>(rows.size()) - 1;
}

LpSolution solve_simplex(const LinearProgram& lp) {
  Solver s(lp);
  s.build();
  const int m = lp.row_count();
  const int max_iter = 6 * (m + s.n_cols) + 5000;

  LpSolution out;

  // phase 1: minimize the sum of artificials
  bool need_phase1 = false;
  std::vector<double> phase1_cost(s.n_cols, 0.0);
  for (int i = 0; i < m; ++i) {
    if (s.art_col[i] >= 0) {
      phase1_cost[s.art_col[i]] = 1.0;
      need_phase1 = true;
    }
  }
  if (need_phase1) {
    s.compute_reduced_costs(phase1_cost);
    const LpStatus st = s.iterate(max_iter);
    if (st == LpStatus::IterationLimit) {
      out.status = st;
      out.iterations = s.iterations;
      return out;
    }
    s.refresh_beta();
    const double infeas = s.objective_at_current(phase1_cost);
    if (infeas > kPhase1Tol) {
      out.status = LpStatus::Infeasible;
      out.iterations = s.iterations;
      return out;
    }
    // pin artificials at zero for phase 2
    for (int i = 0; i < m; ++i) {
      if (s.art_col[i] >= 0) s.up[s.art_col[i]] = 0.0;
    }
  }

  std::vector<double> phase2_cost(s.n_cols, 0.0);
  for (int j = 0; j < s.n_struct; ++j) phase2_cost[j] = lp.objective[j];
  s.compute_reduced_costs(phase2_cost);
  s.bland = false;
  s.stall = 0;
  const LpStatus st = s.iterate(max_iter);
  out.iterations = s.iterations;
  if (st != LpStatus::Optimal) {
    out.status = st;
    return out;
  }
  s.refresh_beta();

  out.status = LpStatus::Optimal;
  out.x.assign(s.n_struct, 0.0);
  std::vector<double> full(s.n_cols, 0.0);
  for (int j = 0; j < s.n_cols; ++j) {
    if (s.state[j] != VarState::Basic) full[j] = s.value[j];
  }
  for (int i = 0; i < m; ++i) full[s.basis[i]] = s.beta[i];
  for (int j = 0; j < s.n_struct; ++j) out.x[j] = full[j];

  double obj = 0.0;
  for (int j = 0; j < s.n_struct; ++j) obj += lp.objective[j] * out.x[j];
  out.objective = obj;

  // primal residual: row and bound violations at the returned point
  double presid = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto& r = lp.rows[i];
    double ax = 0.0;
    for (const auto& [j, c] : r.coeffs) ax += c * out.x[j];
    double viol = 0.0;
    if (r.sense == RowSense::LessEq) viol = ax - r.rhs;
    if (r.sense == RowSense::GreaterEq) viol = r.rhs - ax;
    if (r.sense == RowSense::Equal) viol = std::abs(ax - r.rhs);
    presid = std::max(presid, viol);
  }
  for (int j = 0; j < s.n_struct; ++j) {
    presid = std::max(presid, lp.lower[j] - out.x[j]);
    if (lp.upper[j] < kInf) presid = std::max(presid, out.x[j] - lp.upper[j]);
  }
  out.primal_residual = std::max(presid, 0.0);

  // dual residual and gap from the final reduced costs
  double dresid = 0.0;
  for (int j = 0; j < s.n_cols; ++j) {
    if (s.state[j] == VarState::Basic) {
      dresid = std::max(dresid, std::abs(s.d[j]));
    } else if (s.state[j] == VarState::AtLower) {
      dresid = std::max(dresid, -s.d[j]);
    } else {
      dresid = std::max(dresid, s.d[j]);
    }
  }
  out.dual_residual = std::max(dresid, 0.0);

  // dual objective: y * b + bound contributions of the reduced costs
  std::vector<double> y(m, 0.0);
  for (int i = 0; i < m; ++i) {
    // artificial columns always carry +1 in their standardized row; slack
    // columns do too except in rows that were sign-flipped (which always
    // received an artificial)
    const int base = s.art_col[i] >= 0 ? s.art_col[i] : s.slack_col[i];
    y[i] = -s.d[base];
  }
  double dual_obj = 0.0;
  for (int i = 0; i < m; ++i) dual_obj += y[i] * s.rhs_std[i];
  for (int j = 0; j < s.n_cols; ++j) {
    if (s.d[j] > 0.0) {
      dual_obj += s.d[j] * s.lo[j];
    } else if (s.d[j] < 0.0 && s.up[j] < kInf) {
      dual_obj += s.d[j] * s.up[j];
    }
  }
  out.duality_gap = std::abs(out.objective - dual_obj);
  return out;
}

std::string to_lp_format(const LinearProgram& lp) {
  std::ostringstream os;
  os.precision(12);
  auto var = [&](int j) {
    return lp.names[j].empty() ? "x" + std::to_string(j) : lp.names[j];
  };
  os << "Minimize\n obj:";
  bool first = true;
  for (int j = 0; j < lp.variable_count(); ++j) {
    if (lp.objective[j] == 0.0) continue;
    const double c = lp.objective[j];
    os << (c < 0 ? " - " : (first ? " " : " + ")) << std::abs(c) << " " << var(j);
    first = false;
  }
  if (first) os << " 0 x0";
  os << "\nSubject To\n";
  for (int i = 0; i < lp.row_count(); ++i) {
    const auto& r = lp.rows[i];
    os << " " << (r.name.empty() ? "c" + std::to_string(i) : r.name) << ":";
    bool f = true;
    for (const auto& [j, c] : r.coeffs) {
      os << (c < 0 ? " - " : (f ? " " : " + ")) << std::abs(c) << " " << var(j);
      f = false;
    }
    const char* op = r.sense == RowSense::LessEq    ? "<="
                     : r.sense == RowSense::GreaterEq ? ">="
                                                      : "=";
    os << " " << op << " " << r.rhs << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < lp.variable_count(); ++j) {
    if (lp.upper[j] < kInf) {
      os << " " << lp.lower[j] << " <= " << var(j) << " <= " << lp.upper[j] << "\n";
    } else {
      os << " " << var(j) << " >= " << lp.lower[j] << "\n";
    }
  }
  os << "End\n";
  return os.str();
}

}  // namespace steiner
