#include "mrmd/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mrmd {

LpRelaxation build_lp_relaxation(const Instance& inst, const Reachability& reach) {
  LpRelaxation lp;
  const int n = static_cast<int>(inst.demands.size());

  lp.y_var.resize(n);
  for (int d = 0; d < n; ++d) {
    lp.y_var[d] = lp.num_vars++;
    lp.objective.push_back(static_cast<double>(inst.demands[d].reward));
  }
  auto add_var = [&] {
    lp.objective.push_back(0.0);
    return lp.num_vars++;
  };

  std::vector<TypeSubproblem> subs;
  for (std::size_t r = 0; r < inst.types.size(); ++r)
    subs.push_back(restrict_to_type(reach, inst, static_cast<int>(r)));

  for (std::size_t r = 0; r < inst.types.size(); ++r) {
    const TypeSubproblem& sub = subs[r];
    int type = static_cast<int>(r);
    for (std::size_t k = 0; k < sub.starts.size(); ++k)
      for (int i : sub.start_adj[k])
        lp.start_var[{type, static_cast<int>(k), sub.demands[i]}] = add_var();
    for (std::size_t i = 0; i < sub.demands.size(); ++i)
      for (int j : sub.adj[i]) lp.arc_var[{type, sub.demands[i], sub.demands[j]}] = add_var();
    for (int d : sub.demands) lp.sink_var[{type, d}] = add_var();
  }

  for (std::size_t r = 0; r < inst.types.size(); ++r) {
    const TypeSubproblem& sub = subs[r];
    int type = static_cast<int>(r);
    for (std::size_t k = 0; k < sub.starts.size(); ++k) {
      LpRow row;
      for (int i : sub.start_adj[k])
        row.coef.push_back({lp.start_var[{type, static_cast<int>(k), sub.demands[i]}], 1.0});
      row.op = '<';
      row.rhs = static_cast<double>(sub.starts[k].count);
      lp.rows.push_back(std::move(row));
    }

    // inflow terms per local demand, shared by the conservation and
    // service-coupling rows
    std::vector<std::vector<int>> inflow(sub.demands.size());
    for (std::size_t k = 0; k < sub.starts.size(); ++k)
      for (int i : sub.start_adj[k])
        inflow[i].push_back(lp.start_var[{type, static_cast<int>(k), sub.demands[i]}]);
    for (std::size_t h = 0; h < sub.demands.size(); ++h)
      for (int i : sub.adj[h]) inflow[i].push_back(lp.arc_var[{type, sub.demands[h], sub.demands[i]}]);

    for (std::size_t i = 0; i < sub.demands.size(); ++i) {
      LpRow cons;
      for (int v : inflow[i]) cons.coef.push_back({v, 1.0});
      for (int j : sub.adj[i]) cons.coef.push_back({lp.arc_var[{type, sub.demands[i], sub.demands[j]}], -1.0});
      cons.coef.push_back({lp.sink_var[{type, sub.demands[i]}], -1.0});
      cons.op = '=';
      cons.rhs = 0.0;
      lp.rows.push_back(std::move(cons));

      LpRow serve;
      for (int v : inflow[i]) serve.coef.push_back({v, 1.0});
      serve.coef.push_back({lp.y_var[sub.demands[i]], -1.0});
      serve.op = '>';
      serve.rhs = 0.0;
      lp.rows.push_back(std::move(serve));
    }
  }
  return lp;
}

namespace {

constexpr double kTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarStatus { Basic, AtLower, AtUpper };

// Dense bounded-variable primal simplex, maximizing.
class Simplex {
 public:
  explicit Simplex(const LpRelaxation& lp)
      : m_(static_cast<int>(lp.rows.size())), n_struct_(lp.num_vars) {
    total_ = n_struct_ + m_;
    lower_.assign(total_, 0.0);
    upper_.assign(total_, 1.0);
    cost_.assign(total_, 0.0);
    for (int j = 0; j < n_struct_; ++j) cost_[j] = lp.objective[j];

    tableau_.assign(m_, std::vector<double>(total_, 0.0));
    rhs_.resize(m_);
    basis_.resize(m_);
    status_.assign(total_, VarStatus::AtLower);
    for (int i = 0; i < m_; ++i) {
      const LpRow& row = lp.rows[i];
      for (auto [j, c] : row.coef) tableau_[i][j] += c;
      int slack = n_struct_ + i;
      switch (row.op) {
        case '<':
          tableau_[i][slack] = 1.0;
          upper_[slack] = kInf;
          break;
        case '=':
          tableau_[i][slack] = 1.0;
          upper_[slack] = 0.0;
          break;
        case '>':
          tableau_[i][slack] = -1.0;
          upper_[slack] = kInf;
          break;
        default:
          throw std::logic_error("bad row op");
      }
      rhs_[i] = row.rhs;
      basis_[i] = slack;
      status_[slack] = VarStatus::Basic;
      if (row.rhs < -kTol) throw std::logic_error("row rhs must be nonnegative");
    }
    value_ = rhs_;  // nonbasic structurals all start at 0
    reduced_ = cost_;
  }

  void solve() {
    const long max_iters = 4000L + 400L * (m_ + total_);
    long degenerate_run = 0;
    bool bland = false;
    for (long iter = 0; iter < max_iters; ++iter) {
      int enter = pick_entering(bland);
      if (enter < 0) return;  // optimal
      double dir = status_[enter] == VarStatus::AtLower ? 1.0 : -1.0;

      // ratio test: entering moves by t*dir, basics move by -t*dir*column
      double t = upper_[enter] - lower_[enter];  // bound flip
      int leave_row = -1;
      for (int i = 0; i < m_; ++i) {
        double step = dir * tableau_[i][enter];
        double limit;
        if (step > kTol)
          limit = (value_[i] - lower_[basis_[i]]) / step;
        else if (step < -kTol && upper_[basis_[i]] < kInf)
          limit = (upper_[basis_[i]] - value_[i]) / (-step);
        else
          continue;
        if (limit < t - kTol ||
            (leave_row >= 0 && limit < t + kTol && basis_[i] < basis_[leave_row])) {
          t = limit;
          leave_row = i;
        } else if (leave_row < 0 && limit <= t) {
          t = limit;
          leave_row = i;
        }
      }
      if (t >= kInf) throw std::logic_error("LP is unbounded");
      if (t < kTol) {
        if (++degenerate_run > 64) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
      t = std::max(t, 0.0);

      for (int i = 0; i < m_; ++i) value_[i] -= t * dir * tableau_[i][enter];
      if (leave_row < 0) {  // bound flip
        status_[enter] = status_[enter] == VarStatus::AtLower ? VarStatus::AtUpper : VarStatus::AtLower;
        continue;
      }
      int leave = basis_[leave_row];
      double entering_value =
          (status_[enter] == VarStatus::AtLower ? lower_[enter] : upper_[enter]) + t * dir;
      status_[leave] = dir * tableau_[leave_row][enter] > 0 ? VarStatus::AtLower : VarStatus::AtUpper;
      basis_[leave_row] = enter;
      status_[enter] = VarStatus::Basic;
      value_[leave_row] = entering_value;
      pivot(leave_row, enter);
    }
    throw std::logic_error("simplex iteration limit exceeded");
  }

  // Nonbasic values from statuses; basic values re-solved from the original
  // rows via LU so the result is as clean as the input data.
  std::vector<double> extract(const LpRelaxation& lp) const {
    std::vector<double> x(total_, 0.0);
    for (int j = 0; j < total_; ++j)
      if (status_[j] == VarStatus::AtUpper) x[j] = upper_[j];

    std::vector<std::vector<double>> B(m_, std::vector<double>(m_, 0.0));
    std::vector<double> b(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      b[i] = lp.rows[i].rhs;
      for (auto [j, c] : lp.rows[i].coef)
        if (status_[j] != VarStatus::Basic) b[i] -= c * x[j];
      // slack columns contribute only when basic; nonbasic slacks sit at a
      // bound, which is 0 except for flipped <=/>= slacks (unbounded above,
      // so never at upper)
    }
    std::vector<int> col_of(m_);
    for (int i = 0; i < m_; ++i) col_of[i] = basis_[i];
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) {
        int j = col_of[k];
        if (j >= n_struct_) {
          int row = j - n_struct_;
          if (row == i) B[i][k] = lp.rows[i].op == '>' ? -1.0 : 1.0;
        } else {
          for (auto [cj, c] : lp.rows[i].coef)
            if (cj == j) B[i][k] += c;
        }
      }
    }
    std::vector<double> xb = lu_solve(B, b);
    for (int k = 0; k < m_; ++k) x[col_of[k]] = xb[k];
    return x;
  }

 private:
  int pick_entering(bool bland) const {
    int best = -1;
    double best_score = kTol;
    for (int j = 0; j < total_; ++j) {
      if (status_[j] == VarStatus::Basic) continue;
      if (upper_[j] <= lower_[j] + kTol) continue;  // fixed variable
      double rc = reduced_[j];
      bool eligible = (status_[j] == VarStatus::AtLower && rc > kTol) ||
                      (status_[j] == VarStatus::AtUpper && rc < -kTol);
      if (!eligible) continue;
      if (bland) return j;
      if (std::fabs(rc) > best_score) {
        best_score = std::fabs(rc);
        best = j;
      }
    }
    return best;
  }

  void pivot(int row, int col) {
    double p = tableau_[row][col];
    for (int j = 0; j < total_; ++j) tableau_[row][j] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      double f = tableau_[i][col];
      if (f == 0.0) continue;
      for (int j = 0; j < total_; ++j) tableau_[i][j] -= f * tableau_[row][j];
    }
    double f = reduced_[col];
    if (f != 0.0)
      for (int j = 0; j < total_; ++j) reduced_[j] -= f * tableau_[row][j];
  }

  static std::vector<double> lu_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int i = col + 1; i < n; ++i)
        if (std::fabs(a[i][col]) > std::fabs(a[piv][col])) piv = i;
      if (std::fabs(a[piv][col]) < 1e-12) throw std::logic_error("singular basis matrix");
      std::swap(a[col], a[piv]);
      std::swap(b[col], b[piv]);
      for (int i = col + 1; i < n; ++i) {
        double f = a[i][col] / a[col][col];
        if (f == 0.0) continue;
        a[i][col] = 0.0;
        for (int j = col + 1; j < n; ++j) a[i][j] -= f * a[col][j];
        b[i] -= f * b[col];
      }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
      double s = b[i];
      for (int j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
      x[i] = s / a[i][i];
    }
    return x;
  }

  int m_;
  int n_struct_;
  int total_;
  std::vector<double> lower_, upper_, cost_;
  std::vector<std::vector<double>> tableau_;
  std::vector<double> rhs_;
  std::vector<int> basis_;
  std::vector<VarStatus> status_;
  std::vector<double> value_;    // basic variable values, per row
  std::vector<double> reduced_;  // reduced costs, per variable
};

}  // namespace

FractionalSolution solve_lp(const LpRelaxation& lp) {
  FractionalSolution out;
  if (lp.rows.empty()) {
    // no resources or demands: everything at its reward-maximizing bound
    out.x.assign(lp.num_vars, 0.0);
    out.y.assign(lp.y_var.size(), 0.0);
    for (std::size_t d = 0; d < lp.y_var.size(); ++d) {
      out.x[lp.y_var[d]] = lp.objective[lp.y_var[d]] > 0 ? 1.0 : 0.0;
      out.y[d] = out.x[lp.y_var[d]];
      out.objective += lp.objective[lp.y_var[d]] * out.y[d];
    }
    return out;
  }

  Simplex simplex(lp);
  simplex.solve();
  std::vector<double> full = simplex.extract(lp);
  out.x.assign(full.begin(), full.begin() + lp.num_vars);
  out.y.resize(lp.y_var.size());
  for (std::size_t d = 0; d < lp.y_var.size(); ++d) out.y[d] = out.x[lp.y_var[d]];
  out.objective = 0.0;
  for (int j = 0; j < lp.num_vars; ++j) out.objective += lp.objective[j] * out.x[j];
  return out;
}

}  // namespace mrmd
