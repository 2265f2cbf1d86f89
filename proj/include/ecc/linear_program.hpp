#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ecc::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { minimize, maximize };
enum class Relation { less_equal, greater_equal, equal };

struct Term {
  std::size_t var;
  double coef;
};

struct Constraint {
  std::vector<Term> terms;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
  std::string name;
};

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  double cost = 0.0;
};

/// A linear program  opt c^T x + constant  s.t.  rows, lower <= x <= upper.
/// Equalities stay equalities in the model; only the solver splits them.
class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::minimize) : sense_(sense) {}

  std::size_t add_variable(std::string name, double lower = 0.0, double upper = kInfinity,
                           double cost = 0.0);
  void add_constraint(std::vector<Term> terms, Relation relation, double rhs,
                      std::string name = {});
  void set_cost(std::size_t var, double cost) { vars_.at(var).cost = cost; }
  void set_bounds(std::size_t var, double lower, double upper) {
    vars_.at(var).lower = lower;
    vars_.at(var).upper = upper;
  }
  void set_constant(double constant) { constant_ = constant; }
  void set_sense(Sense sense) { sense_ = sense; }

  Sense sense() const noexcept { return sense_; }
  double constant() const noexcept { return constant_; }
  std::size_t num_variables() const noexcept { return vars_.size(); }
  std::size_t num_constraints() const noexcept { return rows_.size(); }
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  const std::vector<Constraint>& constraints() const noexcept { return rows_; }

  /// Empty iff every variable index is in range and every lower <= upper.
  std::vector<std::string> validate() const;

  /// Objective value of a primal vector (constant included).
  double objective(const std::vector<double>& x) const;
  /// Largest violation of rows and bounds by x, scaled by max(1, |rhs|).
  double max_violation(const std::vector<double>& x) const;

 private:
  Sense sense_;
  double constant_ = 0.0;
  std::vector<Variable> vars_;
  std::vector<Constraint> rows_;
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };
std::string_view to_string(Status status);

struct LpResult {
  Status status = Status::iteration_limit;
  double value = 0.0;
  std::vector<double> primal;
  /// True where the variable is basic in the final basis.
  std::vector<bool> basic;
  std::size_t iterations = 0;
};

struct SolveOptions {
  std::size_t iteration_limit = 1'000'000;
  /// Consecutive degenerate pivots before switching from Dantzig pricing to
  /// Bland's rule.
  std::size_t degenerate_switch = 50;
  /// Run the row-elimination kernel with OpenMP.
  bool parallel = true;
};

/// Dense bounded-variable primal simplex (two phases, tableau form). Returns a
/// basic optimal solution when status == optimal. Deterministic: pricing is
/// Dantzig's rule with lowest-index ties and falls back to Bland's rule after a
/// run of degenerate pivots.
LpResult solve(const LinearProgram& program, const SolveOptions& options = {});

/// CPLEX LP file text (Minimize/Maximize, Subject To, Bounds, End).
std::string export_lp_text(const LinearProgram& program);

/// Parses "name value" lines (blank lines and '#' comments ignored).
std::map<std::string, double> parse_solution_text(std::string_view text);

/// Primal vector in variable order from named values; missing names are 0.
std::vector<double> primal_from_named(const LinearProgram& program,
                                      const std::map<std::string, double>& values);

}  // namespace ecc::lp
