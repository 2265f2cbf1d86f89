#include "ecc/ecc_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ecc/errors.hpp"

namespace ecc {

namespace {

constexpr double kSnap = 1e-7;

std::string node_var(std::size_t v, Color i) {
  return "xn_" + std::to_string(v) + "_" + std::to_string(i);
}

}  // namespace

lp::LinearProgram build_ecc_lp(const EdgeColoredHypergraph& h) {
  lp::LinearProgram program;
  const Color k = h.num_colors();
  for (std::size_t v = 0; v < h.num_nodes(); ++v)
    for (Color i = 1; i <= k; ++i) program.add_variable(node_var(v, i), 0.0, 1.0);
  const std::size_t edge_base = h.num_nodes() * k;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    program.add_variable("xe_" + std::to_string(e), 0.0, 1.0, h.weight(e));

  for (std::size_t v = 0; v < h.num_nodes(); ++v) {
    std::vector<lp::Term> terms;
    for (Color i = 0; i < k; ++i) terms.push_back({v * k + i, 1.0});
    program.add_constraint(std::move(terms), lp::Relation::equal, static_cast<double>(k) - 1.0,
                           "node_" + std::to_string(v));
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    for (NodeId v : h.members(e))
      program.add_constraint({{edge_base + e, 1.0}, {v * k + (h.color(e) - 1), -1.0}},
                             lp::Relation::greater_equal, 0.0,
                             "cov_" + std::to_string(e) + "_" + std::to_string(v));
  return program;
}

lp::LinearProgram build_nodemc_lp(const WeightedGraph& g, Color k) {
  lp::LinearProgram program;
  auto y = [k](std::size_t u, Color i) { return u * k + (i - 1); };
  for (std::size_t u = 0; u < g.num_nodes; ++u)
    for (Color i = 1; i <= k; ++i)
      program.add_variable("y_" + std::to_string(u) + "_" + std::to_string(i));
  std::vector<std::size_t> d(g.num_nodes, static_cast<std::size_t>(-1));
  for (std::size_t u = 0; u < g.num_nodes; ++u)
    if (!g.undeletable[u])
      d[u] = program.add_variable("d_" + std::to_string(u), 0.0, lp::kInfinity, g.weights[u]);

  for (const auto& t : g.terminals) {
    for (Color j = 1; j <= k; ++j) {
      if (j == t.color)
        program.set_bounds(y(t.node, j), 0.0, 0.0);
      else
        program.set_bounds(y(t.node, j), 1.0, lp::kInfinity);
    }
  }
  std::size_t row = 0;
  for (auto [a, b] : g.edges)
    for (int orient = 0; orient < 2; ++orient, std::swap(a, b))
      for (Color i = 1; i <= k; ++i) {
        std::vector<lp::Term> terms{{y(a, i), 1.0}, {y(b, i), -1.0}};
        if (d[a] != static_cast<std::size_t>(-1)) terms.push_back({d[a], -1.0});
        program.add_constraint(std::move(terms), lp::Relation::less_equal, 0.0,
                               "path_" + std::to_string(row++));
      }
  return program;
}

lp::LinearProgram build_nodemc_lp(const EdgeColoredHypergraph& h) {
  return build_nodemc_lp(ecc_to_node_mc(h), h.num_colors());
}

EccLpSolution extract_ecc_solution(const EdgeColoredHypergraph& h,
                                   const std::vector<double>& primal) {
  const Color k = h.num_colors();
  const std::size_t expected = h.num_nodes() * k + h.num_edges();
  if (primal.size() != expected)
    throw std::invalid_argument("primal vector has " + std::to_string(primal.size()) +
                                " entries, ECC LP has " + std::to_string(expected));
  EccLpSolution x;
  x.num_nodes = h.num_nodes();
  x.num_colors = k;
  x.x_node.assign(primal.begin(), primal.begin() + static_cast<std::ptrdiff_t>(h.num_nodes() * k));
  for (double& value : x.x_node) {
    if (std::abs(value) <= kSnap) value = 0.0;
    if (std::abs(value - 1.0) <= kSnap) value = 1.0;
  }
  x.x_edge.assign(h.num_edges(), 0.0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    double worst = 0.0;
    for (NodeId v : h.members(e)) worst = std::max(worst, x.node(v, h.color(e)));
    x.x_edge[e] = worst;
    x.value += h.weight(e) * worst;
  }
  if (const auto problems = check_ecc_solution(h, x); !problems.empty())
    throw VerificationFailure("LP solution infeasible: " + problems.front());
  return x;
}

EccLpSolution extract_ecc_solution(const EdgeColoredHypergraph& h, const lp::LpResult& result) {
  if (result.status != lp::Status::optimal)
    throw std::invalid_argument("LP not optimal: " + std::string(lp::to_string(result.status)));
  return extract_ecc_solution(h, result.primal);
}

std::vector<std::string> check_ecc_solution(const EdgeColoredHypergraph& h, const EccLpSolution& x,
                                            double tol) {
  std::vector<std::string> out;
  const Color k = h.num_colors();
  if (x.num_nodes != h.num_nodes() || x.num_colors != k ||
      x.x_node.size() != h.num_nodes() * k || x.x_edge.size() != h.num_edges()) {
    out.push_back("dimension mismatch");
    return out;
  }
  for (std::size_t v = 0; v < h.num_nodes(); ++v) {
    double sum = 0.0;
    for (Color i = 1; i <= k; ++i) {
      const double value = x.node(static_cast<NodeId>(v), i);
      if (value < -tol || value > 1.0 + tol)
        out.push_back(node_var(v, i) + " = " + std::to_string(value) + " outside [0,1]");
      sum += value;
    }
    if (std::abs(sum - (static_cast<double>(k) - 1.0)) > tol)
      out.push_back("node " + std::to_string(v) + " distances sum to " + std::to_string(sum));
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (x.x_edge[e] < -tol || x.x_edge[e] > 1.0 + tol)
      out.push_back("xe_" + std::to_string(e) + " outside [0,1]");
    for (NodeId v : h.members(e))
      if (x.x_edge[e] < x.node(v, h.color(e)) - tol)
        out.push_back("xe_" + std::to_string(e) + " below x_" + std::to_string(v) + "^" +
                      std::to_string(h.color(e)));
  }
  return out;
}

namespace {

lp::LpResult solve_checked(const lp::LinearProgram& program, const lp::SolveOptions& options) {
  if (program.num_variables() > kReferenceSolverCapacity)
    throw CapacityExceeded("LP has " + std::to_string(program.num_variables()) +
                           " variables; the reference solver handles at most " +
                           std::to_string(kReferenceSolverCapacity) +
                           ". Export it and solve externally.");
  auto result = lp::solve(program, options);
  if (result.status != lp::Status::optimal)
    throw std::runtime_error("LP solve ended with status " +
                             std::string(lp::to_string(result.status)));
  return result;
}

}  // namespace

EccLpSolution solve_ecc_lp(const EdgeColoredHypergraph& h, const lp::SolveOptions& options) {
  const auto program = build_ecc_lp(h);
  return extract_ecc_solution(h, solve_checked(program, options));
}

double solve_value(const lp::LinearProgram& program, const lp::SolveOptions& options) {
  return solve_checked(program, options).value;
}

}  // namespace ecc
