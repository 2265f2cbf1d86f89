#pragma once

#include <string>
#include <vector>

#include "ecc/hypergraph.hpp"
#include "ecc/linear_program.hpp"
#include "ecc/reductions.hpp"

namespace ecc {

/// Fractional solution of the canonical MinECC LP: x_v^i is the distance of
/// node v from color i, x_e the mistake indicator of edge e.
struct EccLpSolution {
  std::size_t num_nodes = 0;
  Color num_colors = 0;
  /// Row-major |V| x k, entry (v, i) at v * k + (i - 1).
  std::vector<double> x_node;
  std::vector<double> x_edge;
  double value = 0.0;

  double node(NodeId v, Color i) const { return x_node[v * num_colors + (i - 1)]; }
  double& node(NodeId v, Color i) { return x_node[v * num_colors + (i - 1)]; }
};

/// Canonical relaxation: variables xn_v_i (index v*k + i-1) then xe_j (index
/// |V|k + j), all in [0, 1]; rows node_v (sum_i x_v^i = k-1) and cov_e_v
/// (x_e - x_v^c >= 0); objective min sum_e w_e x_e.
lp::LinearProgram build_ecc_lp(const EdgeColoredHypergraph& h);

/// Distance LP for node-weighted multiway cut over a graph with terminals.
/// Variables y_u_i >= 0 for every node and color, d_u >= 0 for deletable
/// nodes only (undeletable nodes have d fixed to 0 by omission). Rows
/// y_a^i - y_b^i - d_a <= 0 for both orientations of each edge and each color;
/// y_{t_i}^i = 0 and y_{t_i}^j >= 1 as bounds.
lp::LinearProgram build_nodemc_lp(const WeightedGraph& g, Color num_colors);
/// Same over ecc_to_node_mc(h).
lp::LinearProgram build_nodemc_lp(const EdgeColoredHypergraph& h);

/// Reads x from a primal vector of build_ecc_lp(h), snaps entries within 1e-7
/// of 0 or 1, tightens x_e to max_{v in e} x_v^c and recomputes the value.
/// Throws VerificationFailure when the result violates the LP invariants.
EccLpSolution extract_ecc_solution(const EdgeColoredHypergraph& h,
                                   const std::vector<double>& primal);
/// Throws std::invalid_argument unless result.status is optimal.
EccLpSolution extract_ecc_solution(const EdgeColoredHypergraph& h, const lp::LpResult& result);

/// Violations of the EccLpSolution invariants beyond `tol`; empty if feasible.
std::vector<std::string> check_ecc_solution(const EdgeColoredHypergraph& h,
                                            const EccLpSolution& x, double tol = 1e-6);

/// Variable ceiling for the in-library simplex; larger LPs go through export.
inline constexpr std::size_t kReferenceSolverCapacity = 5000;

/// Builds and solves the ECC LP. Throws CapacityExceeded above the reference
/// solver capacity and std::runtime_error if the solver does not reach
/// optimality.
EccLpSolution solve_ecc_lp(const EdgeColoredHypergraph& h, const lp::SolveOptions& options = {});

/// Optimal value of an LP, with the same capacity and status handling.
double solve_value(const lp::LinearProgram& program, const lp::SolveOptions& options = {});

}  // namespace ecc
