#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecc/ecc_lp.hpp"
#include "ecc/hypergraph.hpp"

namespace ecc {

/// Open interval (lo, hi) inside [0, 1].
struct Interval {
  double lo = 0.5;
  double hi = 0.75;
};

struct IntervalChoice {
  Interval interval;
  /// Proven approximation factor; 1 means the rounding is exact (k <= 2).
  double factor = 1.0;
};

/// (1/2, 7/8) for r = 2; else (1/2, 3/4) when k <= r+1 and (1/2, 2/3)
/// otherwise. factor = min(2 - 2/k, 2 - 2/(r+1)), at least 1. Throws for r < 2.
IntervalChoice best_interval(Color k, std::size_t r);

/// The random choices of one rounding: the threshold rho and the permutation
/// of colors (later entries take priority).
struct RoundingDraw {
  double rho = 0.0;
  std::vector<Color> order;
};

/// rho uniform in the open interval, order a Fisher-Yates shuffle of 1..k.
RoundingDraw draw_rounding(Color k, Interval interval, std::uint64_t seed);

/// Y[v] = the last color c in `order` with x_v^c < rho, or 1 if there is none.
NodeColoring round_with(const EccLpSolution& x, const RoundingDraw& draw);

/// One run of the generic color rounding with a seeded draw. Throws
/// std::invalid_argument if x violates the LP invariants for h.
NodeColoring gen_color_round(const EdgeColoredHypergraph& h, const EccLpSolution& x,
                             Interval interval, std::uint64_t seed);

/// argmin_i x_v^i per node, ties to the lowest color.
NodeColoring simple_round(const EccLpSolution& x);

/// Sorted m_j = min_{v in e} x_v^j over colors j != color(e) (k-1 values).
std::vector<double> color_thresholds(const EdgeColoredHypergraph& h, const EccLpSolution& x,
                                     EdgeId e);

struct ProbabilityEstimate {
  double p = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

/// Monte Carlo frequency of a mistake at e; trial t uses derive_seed(seed, t).
ProbabilityEstimate estimate_mistake_prob(const EdgeColoredHypergraph& h, const EccLpSolution& x,
                                          Interval interval, EdgeId e, std::size_t trials,
                                          std::uint64_t seed, bool parallel = true);

/// Same for every edge at once, sharing the draws.
std::vector<ProbabilityEstimate> estimate_mistake_probs(const EdgeColoredHypergraph& h,
                                                        const EccLpSolution& x, Interval interval,
                                                        std::size_t trials, std::uint64_t seed,
                                                        bool parallel = true);

struct CostStats {
  double mean = 0.0;
  double std_error = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t trials = 0;
};

/// Cost of gen_color_round over `trials` seeds derive_seed(seed, t).
CostStats rounding_cost_stats(const EdgeColoredHypergraph& h, const EccLpSolution& x,
                              Interval interval, std::size_t trials, std::uint64_t seed,
                              bool parallel = true);

enum class SyntheticFamily {
  /// k = 3, edge (u, v) of color 1, x_e = (1-eps)/2 and competing colors 2 at
  /// u and 3 at v at distance (1+eps)/2.
  two_competitors,
  /// k = 5, x_e = 2/3; u is at 2/3 from colors 1, 2, 3 and v from 1, 4, 5.
  five_colors,
  /// k = 4, thresholds z = (0.7, 0.8, 0.9) above x_e = 0.3, each competing
  /// color wanting exactly one endpoint.
  staggered_thresholds,
};

struct SyntheticInstance {
  EdgeColoredHypergraph hypergraph;
  EccLpSolution x;
  EdgeId edge = 0;
};

/// Hand-built feasible LP solutions on a single edge. `eps` is used by
/// two_competitors only and must lie in (0, 1).
SyntheticInstance make_synthetic_solution(SyntheticFamily family, double eps = 0.2);

/// Numeric checks on a feasible x: 1 - z_1 <= x_e on every edge, and
/// t <= x_e + z_t + ... + z_{2t-1} for t <= k/2 on edges of size <= 2.
std::vector<std::string> check_threshold_invariants(const EdgeColoredHypergraph& h,
                                                    const EccLpSolution& x, double tol = 1e-7);

}  // namespace ecc
