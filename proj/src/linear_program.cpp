#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "ecc/errors.hpp"
#include "ecc/linear_program.hpp"

namespace ecc::lp {

std::size_t LinearProgram::add_variable(std::string name, double lower, double upper,
                                        double cost) {
  vars_.push_back({std::move(name), lower, upper, cost});
  return vars_.size() - 1;
}

void LinearProgram::add_constraint(std::vector<Term> terms, Relation relation, double rhs,
                                   std::string name) {
  rows_.push_back({std::move(terms), relation, rhs, std::move(name)});
}

std::vector<std::string> LinearProgram::validate() const {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < vars_.size(); ++j)
    if (!(vars_[j].lower <= vars_[j].upper))
      out.push_back("variable " + vars_[j].name + " has lower > upper");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& t : rows_[i].terms)
      if (t.var >= vars_.size())
        out.push_back("row " + std::to_string(i) + " references variable " +
                      std::to_string(t.var) + " out of range");
  return out;
}

double LinearProgram::objective(const std::vector<double>& x) const {
  double z = constant_;
  for (std::size_t j = 0; j < vars_.size(); ++j) z += vars_[j].cost * x.at(j);
  return z;
}

double LinearProgram::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (const auto& row : rows_) {
    double lhs = 0.0;
    for (const auto& t : row.terms) lhs += t.coef * x.at(t.var);
    double v = 0.0;
    switch (row.relation) {
      case Relation::less_equal: v = lhs - row.rhs; break;
      case Relation::greater_equal: v = row.rhs - lhs; break;
      case Relation::equal: v = std::abs(lhs - row.rhs); break;
    }
    worst = std::max(worst, v / std::max(1.0, std::abs(row.rhs)));
  }
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    worst = std::max(worst, vars_[j].lower - x.at(j));
    worst = std::max(worst, x.at(j) - vars_[j].upper);
  }
  return worst;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::iteration_limit: return "iteration-limit";
  }
  return "unknown";
}

namespace {

std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void append_terms(std::string& out, const std::vector<Term>& terms,
                  const std::vector<Variable>& vars) {
  if (terms.empty()) {
    out += " 0 " + vars.front().name;
    return;
  }
  for (const auto& t : terms) {
    out += t.coef < 0 ? " - " : " + ";
    out += num(std::abs(t.coef));
    out += ' ';
    out += vars[t.var].name;
  }
}

}  // namespace

std::string export_lp_text(const LinearProgram& program) {
  const auto& vars = program.variables();
  std::string out = program.sense() == Sense::minimize ? "Minimize\n" : "Maximize\n";
  out += " obj:";
  std::vector<Term> cost;
  for (std::size_t j = 0; j < vars.size(); ++j)
    if (vars[j].cost != 0.0) cost.push_back({j, vars[j].cost});
  if (vars.empty()) {
    out += " 0";
  } else {
    append_terms(out, cost, vars);
  }
  if (program.constant() != 0.0)
    out += (program.constant() < 0 ? " - " : " + ") + num(std::abs(program.constant()));
  out += "\nSubject To\n";
  const auto& rows = program.constraints();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += ' ';
    out += rows[i].name.empty() ? "c" + std::to_string(i) : rows[i].name;
    out += ':';
    append_terms(out, rows[i].terms, vars);
    switch (rows[i].relation) {
      case Relation::less_equal: out += " <= "; break;
      case Relation::greater_equal: out += " >= "; break;
      case Relation::equal: out += " = "; break;
    }
    out += num(rows[i].rhs);
    out += '\n';
  }
  out += "Bounds\n";
  for (const auto& v : vars) {
    if (v.lower == v.upper) {
      out += " " + v.name + " = " + num(v.lower) + "\n";
    } else if (std::isinf(v.lower) && std::isinf(v.upper)) {
      out += " " + v.name + " free\n";
    } else {
      out += " " + num(v.lower) + " <= " + v.name + " <= " + num(v.upper) + "\n";
    }
  }
  out += "End\n";
  return out;
}

std::map<std::string, double> parse_solution_text(std::string_view text) {
  std::map<std::string, double> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto a = line.find_first_not_of(" \t");
    if (a == std::string_view::npos || line[a] == '#') continue;
    const auto a_end = line.find_first_of(" \t", a);
    if (a_end == std::string_view::npos) throw ParseError("expected 'name value'", number);
    const auto b = line.find_first_not_of(" \t", a_end);
    if (b == std::string_view::npos) throw ParseError("expected 'name value'", number);
    auto b_end = line.find_first_of(" \t", b);
    if (b_end == std::string_view::npos) b_end = line.size();
    if (line.find_first_not_of(" \t", b_end) != std::string_view::npos)
      throw ParseError("trailing tokens after value", number);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data() + b, line.data() + b_end, value);
    if (ec != std::errc{} || ptr != line.data() + b_end)
      throw ParseError("bad value '" + std::string(line.substr(b, b_end - b)) + "'", number);
    out[std::string(line.substr(a, a_end - a))] = value;
  }
  return out;
}

std::vector<double> primal_from_named(const LinearProgram& program,
                                      const std::map<std::string, double>& values) {
  std::vector<double> x(program.num_variables(), 0.0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto it = values.find(program.variables()[j].name);
    if (it != values.end()) x[j] = it->second;
  }
  return x;
}

}  // namespace ecc::lp
