#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ecc/kernels.hpp"
#include "ecc/linear_program.hpp"

namespace ecc::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kPhaseOneTol = 1e-7;

// One internal column: a nonnegative variable s in [0, upper]. Structural
// columns map back to model variables via x = offset + sign * s.
struct Column {
  std::size_t var;  // model variable, or npos for a slack
  double sign;
  double upper;
  double cost;
  bool flipped = false;  // currently represented as upper - s
};

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Tableau layout: row 0 is the reduced-cost row, rows 1..m are constraints,
// the last column is the right-hand side. Artificial variables are never
// stored as columns; a row whose basic variable is artificial has basis == npos.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SolveOptions& options) : options_(options) {
    build(lp);
  }

  LpResult run(const LinearProgram& lp) {
    LpResult result;
    if (!phase_one(result)) return result;
    drive_out_artificials();
    load_phase_two_costs();
    const Status status = iterate(result.iterations);
    result.status = status;
    if (status != Status::optimal) return result;
    extract(lp, result);
    return result;
  }

 private:
  double& at(std::size_t r, std::size_t c) { return data_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * width_ + c]; }
  std::size_t rhs() const { return width_ - 1; }
  std::size_t ncols() const { return cols_.size(); }

  void build(const LinearProgram& lp) {
    const auto& vars = lp.variables();
    const double dir = lp.sense() == Sense::maximize ? -1.0 : 1.0;
    std::vector<std::vector<std::size_t>> cols_of(vars.size());
    offset_.assign(vars.size(), 0.0);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const auto& v = vars[j];
      const double c = dir * v.cost;
      if (std::isfinite(v.lower)) {
        offset_[j] = v.lower;
        cols_of[j].push_back(cols_.size());
        cols_.push_back({j, 1.0, v.upper - v.lower, c});
      } else if (std::isfinite(v.upper)) {
        offset_[j] = v.upper;
        cols_of[j].push_back(cols_.size());
        cols_.push_back({j, -1.0, kInfinity, -c});
      } else {
        cols_of[j].push_back(cols_.size());
        cols_.push_back({j, 1.0, kInfinity, c});
        cols_of[j].push_back(cols_.size());
        cols_.push_back({j, -1.0, kInfinity, -c});
      }
    }
    const auto& rows = lp.constraints();
    std::vector<std::size_t> slack_of(rows.size(), npos);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].relation == Relation::equal) continue;
      slack_of[i] = cols_.size();
      cols_.push_back({npos, rows[i].relation == Relation::less_equal ? 1.0 : -1.0, kInfinity, 0.0});
    }

    m_ = rows.size();
    width_ = cols_.size() + 1;
    data_.assign((m_ + 1) * width_, 0.0);
    basis_.assign(m_ + 1, npos);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t r = i + 1;
      double b = rows[i].rhs;
      for (const auto& t : rows[i].terms) {
        b -= t.coef * offset_[t.var];
        for (std::size_t c : cols_of[t.var]) at(r, c) += t.coef * cols_[c].sign;
      }
      if (slack_of[i] != npos) at(r, slack_of[i]) = cols_[slack_of[i]].sign;
      at(r, rhs()) = b;
      if (b < 0.0)
        for (std::size_t c = 0; c < width_; ++c) at(r, c) = -at(r, c);
      if (slack_of[i] != npos && at(r, slack_of[i]) == 1.0) basis_[r] = slack_of[i];
    }
  }

  bool is_basic_column(std::size_t c) const { return basic_flag_[c]; }

  void refresh_basic_flags() {
    basic_flag_.assign(ncols(), false);
    for (std::size_t r = 1; r <= m_; ++r)
      if (basis_[r] != npos) basic_flag_[basis_[r]] = true;
  }

  bool phase_one(LpResult& result) {
    refresh_basic_flags();
    bool any_artificial = false;
    for (std::size_t c = 0; c < width_; ++c) at(0, c) = 0.0;
    for (std::size_t r = 1; r <= m_; ++r) {
      if (basis_[r] != npos) continue;
      any_artificial = true;
      for (std::size_t c = 0; c < width_; ++c) at(0, c) -= at(r, c);
    }
    if (!any_artificial) return true;
    const Status status = iterate(result.iterations);
    if (status == Status::iteration_limit) {
      result.status = status;
      return false;
    }
    double infeasibility = 0.0;
    for (std::size_t r = 1; r <= m_; ++r)
      if (basis_[r] == npos) infeasibility += std::abs(at(r, rhs()));
    if (infeasibility > kPhaseOneTol) {
      result.status = Status::infeasible;
      return false;
    }
    return true;
  }

  void drive_out_artificials() {
    for (std::size_t r = 1; r <= m_;) {
      if (basis_[r] != npos) {
        ++r;
        continue;
      }
      at(r, rhs()) = 0.0;
      std::size_t best = npos;
      double best_abs = kPivotTol;
      for (std::size_t c = 0; c < ncols(); ++c) {
        if (basic_flag_[c]) continue;
        const double a = std::abs(at(r, c));
        if (a > best_abs) {
          best_abs = a;
          best = c;
        }
      }
      if (best != npos) {
        pivot(r, best);
        ++r;
        continue;
      }
      // Redundant row: overwrite with the last constraint row.
      if (r != m_) {
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(m_ * width_), width_,
                    data_.begin() + static_cast<std::ptrdiff_t>(r * width_));
        basis_[r] = basis_[m_];
      }
      --m_;
      data_.resize((m_ + 1) * width_);
      basis_.resize(m_ + 1);
    }
  }

  double oriented_cost(std::size_t c) const {
    return cols_[c].flipped ? -cols_[c].cost : cols_[c].cost;
  }

  void load_phase_two_costs() {
    for (std::size_t c = 0; c < ncols(); ++c) at(0, c) = oriented_cost(c);
    at(0, rhs()) = 0.0;
    for (std::size_t r = 1; r <= m_; ++r) {
      const double cb = oriented_cost(basis_[r]);
      if (cb == 0.0) continue;
      for (std::size_t c = 0; c < width_; ++c) at(0, c) -= cb * at(r, c);
    }
    for (std::size_t r = 1; r <= m_; ++r) at(0, basis_[r]) = 0.0;
  }

  double upper_of_basic(std::size_t r) const {
    return basis_[r] == npos ? kInfinity : cols_[basis_[r]].upper;
  }

  void flip(std::size_t c) {
    const double u = cols_[c].upper;
    for (std::size_t r = 0; r <= m_; ++r) {
      double& a = at(r, c);
      if (a == 0.0) continue;
      at(r, rhs()) -= a * u;
      a = -a;
    }
    cols_[c].flipped = !cols_[c].flipped;
  }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    nz_.clear();
    for (std::size_t j = 0; j < width_; ++j) {
      double& a = at(r, j);
      if (a == 0.0) continue;
      a /= p;
      nz_.push_back(j);
    }
    at(r, c) = 1.0;
    if (options_.parallel)
      kernels::eliminate(data_, m_ + 1, width_, r, c, nz_);
    else
      kernels::eliminate_serial(data_, m_ + 1, width_, r, c, nz_);
    last_left_ = basis_[r];
    if (basis_[r] != npos) basic_flag_[basis_[r]] = false;
    basis_[r] = c;
    basic_flag_[c] = true;
  }

  Status iterate(std::size_t& iterations) {
    bool bland = false;
    std::size_t degenerate_run = 0;
    while (true) {
      if (iterations >= options_.iteration_limit) return Status::iteration_limit;

      std::size_t enter = npos;
      double best = -kCostTol;
      for (std::size_t c = 0; c < ncols(); ++c) {
        if (basic_flag_[c] || cols_[c].upper <= 0.0) continue;
        const double d = at(0, c);
        if (d >= -kCostTol) continue;
        if (bland) {
          enter = c;
          break;
        }
        if (d < best) {
          best = d;
          enter = c;
        }
      }
      if (enter == npos) return Status::optimal;

      // Ratio test over basic variables plus the entering bound flip.
      double step = cols_[enter].upper;
      std::size_t leave = npos;
      bool leave_at_upper = false;
      for (std::size_t r = 1; r <= m_; ++r) {
        const double a = at(r, enter);
        double limit;
        bool to_upper;
        if (a > kPivotTol) {
          limit = std::max(at(r, rhs()), 0.0) / a;
          to_upper = false;
        } else if (a < -kPivotTol) {
          const double u = upper_of_basic(r);
          if (!std::isfinite(u)) continue;
          limit = std::max(u - at(r, rhs()), 0.0) / -a;
          to_upper = true;
        } else {
          continue;
        }
        const bool better =
            limit < step ||
            (limit == step && leave != npos && tie_break(r, leave));
        if (better) {
          step = limit;
          leave = r;
          leave_at_upper = to_upper;
        }
      }
      if (leave == npos && !std::isfinite(step)) return Status::unbounded;

      ++iterations;
      if (leave == npos) {
        flip(enter);
      } else {
        pivot(leave, enter);
        if (leave_at_upper) {
          // The leaving variable sits at its upper bound; represent it as 0.
          flip(last_left_);
        }
      }

      if (step <= 1e-12) {
        if (++degenerate_run >= options_.degenerate_switch) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
    }
  }

  // Bland's leaving rule: smallest basic column index, artificial rows first.
  bool tie_break(std::size_t r, std::size_t current) const {
    const std::size_t a = basis_[r] == npos ? 0 : basis_[r] + 1;
    const std::size_t b = basis_[current] == npos ? 0 : basis_[current] + 1;
    return a < b;
  }

  void extract(const LinearProgram& lp, LpResult& result) {
    std::vector<double> s(ncols(), 0.0);
    std::vector<bool> basic(ncols(), false);
    for (std::size_t r = 1; r <= m_; ++r) {
      s[basis_[r]] = at(r, rhs());
      basic[basis_[r]] = true;
    }
    for (std::size_t c = 0; c < ncols(); ++c) {
      if (cols_[c].flipped) s[c] = cols_[c].upper - s[c];
      s[c] = std::max(s[c], 0.0);
      if (std::isfinite(cols_[c].upper)) s[c] = std::min(s[c], cols_[c].upper);
    }
    result.primal = offset_;
    result.basic.assign(lp.num_variables(), false);
    for (std::size_t c = 0; c < ncols(); ++c) {
      if (cols_[c].var == npos) continue;
      result.primal[cols_[c].var] += cols_[c].sign * s[c];
      if (basic[c]) result.basic[cols_[c].var] = true;
    }
    result.value = lp.objective(result.primal);
  }

  // pivot() records which column left so a leave-at-upper flip can find it.
  std::size_t last_left_ = npos;

  const SolveOptions& options_;
  std::vector<Column> cols_;
  std::vector<double> offset_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
  std::vector<bool> basic_flag_;
  std::vector<std::size_t> nz_;
  std::size_t m_ = 0;
  std::size_t width_ = 0;
};

}  // namespace

LpResult solve(const LinearProgram& program, const SolveOptions& options) {
  const auto problems = program.validate();
  if (!problems.empty()) throw std::invalid_argument("malformed LP: " + problems.front());
  for (const auto& v : program.variables())
    if (v.lower > v.upper) {
      LpResult r;
      r.status = Status::infeasible;
      return r;
    }
  Tableau tableau(program, options);
  return tableau.run(program);
}

}  // namespace ecc::lp
