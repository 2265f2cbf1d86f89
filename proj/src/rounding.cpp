#include "ecc/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ecc/kernels.hpp"
#include "ecc/random.hpp"

namespace ecc {

IntervalChoice best_interval(Color k, std::size_t r) {
  if (r < 2) throw std::invalid_argument("best_interval needs rank r >= 2");
  const double kk = static_cast<double>(k);
  const double rr = static_cast<double>(r);
  IntervalChoice out;
  if (r == 2)
    out.interval = {0.5, 0.875};
  else if (k <= r + 1)
    out.interval = {0.5, 0.75};
  else
    out.interval = {0.5, 2.0 / 3.0};
  out.factor = std::max(1.0, std::min(2.0 - 2.0 / kk, 2.0 - 2.0 / (rr + 1.0)));
  return out;
}

RoundingDraw draw_rounding(Color k, Interval interval, std::uint64_t seed) {
  if (!(0.0 <= interval.lo && interval.lo < interval.hi && interval.hi <= 1.0))
    throw std::invalid_argument("interval must satisfy 0 <= lo < hi <= 1");
  Rng rng = make_rng(seed);
  RoundingDraw draw;
  draw.rho = interval.lo + (interval.hi - interval.lo) * uniform_open01(rng);
  // Guard the open endpoints against rounding of lo + width * u.
  if (draw.rho <= interval.lo || draw.rho >= interval.hi)
    draw.rho = interval.lo + 0.5 * (interval.hi - interval.lo);
  draw.order.resize(k);
  std::iota(draw.order.begin(), draw.order.end(), Color{1});
  for (std::size_t i = k; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(draw.order[i - 1], draw.order[pick(rng)]);
  }
  return draw;
}

namespace {

Color color_of(const EccLpSolution& x, NodeId v, const RoundingDraw& draw) {
  for (auto it = draw.order.rbegin(); it != draw.order.rend(); ++it)
    if (x.node(v, *it) < draw.rho) return *it;
  return 1;
}

bool edge_mistake(const EdgeColoredHypergraph& h, const EccLpSolution& x, EdgeId e,
                  const RoundingDraw& draw) {
  for (NodeId v : h.members(e))
    if (color_of(x, v, draw) != h.color(e)) return true;
  return false;
}

void require_feasible(const EdgeColoredHypergraph& h, const EccLpSolution& x) {
  if (const auto problems = check_ecc_solution(h, x); !problems.empty())
    throw std::invalid_argument("infeasible LP solution: " + problems.front());
}

ProbabilityEstimate make_estimate(std::size_t hits, std::size_t trials) {
  ProbabilityEstimate out;
  out.trials = trials;
  out.p = static_cast<double>(hits) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.p * (1.0 - out.p) / static_cast<double>(trials));
  return out;
}

}  // namespace

NodeColoring round_with(const EccLpSolution& x, const RoundingDraw& draw) {
  NodeColoring y(x.num_nodes, 1);
  for (NodeId v = 0; v < x.num_nodes; ++v) y[v] = color_of(x, v, draw);
  return y;
}

NodeColoring gen_color_round(const EdgeColoredHypergraph& h, const EccLpSolution& x,
                             Interval interval, std::uint64_t seed) {
  require_feasible(h, x);
  return round_with(x, draw_rounding(h.num_colors(), interval, seed));
}

NodeColoring simple_round(const EccLpSolution& x) {
  NodeColoring y(x.num_nodes, 1);
  for (NodeId v = 0; v < x.num_nodes; ++v) {
    double best = x.node(v, 1);
    for (Color i = 2; i <= x.num_colors; ++i)
      if (x.node(v, i) < best) {
        best = x.node(v, i);
        y[v] = i;
      }
  }
  return y;
}

std::vector<double> color_thresholds(const EdgeColoredHypergraph& h, const EccLpSolution& x,
                                     EdgeId e) {
  if (e >= h.num_edges()) throw std::out_of_range("edge index " + std::to_string(e));
  std::vector<double> z;
  for (Color j = 1; j <= h.num_colors(); ++j) {
    if (j == h.color(e)) continue;
    double m = 1.0;
    for (NodeId v : h.members(e)) m = std::min(m, x.node(v, j));
    z.push_back(m);
  }
  std::sort(z.begin(), z.end());
  return z;
}

ProbabilityEstimate estimate_mistake_prob(const EdgeColoredHypergraph& h, const EccLpSolution& x,
                                          Interval interval, EdgeId e, std::size_t trials,
                                          std::uint64_t seed, bool parallel) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (e >= h.num_edges()) throw std::out_of_range("edge index " + std::to_string(e));
  require_feasible(h, x);
  const auto n = static_cast<std::int64_t>(trials);
  std::size_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) if (parallel)
  for (std::int64_t t = 0; t < n; ++t) {
    const auto draw = draw_rounding(h.num_colors(), interval, derive_seed(seed, t));
    hits += edge_mistake(h, x, e, draw);
  }
  return make_estimate(hits, trials);
}

std::vector<ProbabilityEstimate> estimate_mistake_probs(const EdgeColoredHypergraph& h,
                                                        const EccLpSolution& x, Interval interval,
                                                        std::size_t trials, std::uint64_t seed,
                                                        bool parallel) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  require_feasible(h, x);
  const std::size_t m = h.num_edges();
  std::vector<std::size_t> hits(m, 0);
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel if (parallel)
  {
    std::vector<std::size_t> local(m, 0);
    std::vector<std::uint8_t> marks(m);
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < n; ++t) {
      const auto y = round_with(x, draw_rounding(h.num_colors(), interval, derive_seed(seed, t)));
      kernels::mark_mistakes_serial(h, y.values(), marks);
      for (std::size_t e = 0; e < m; ++e) local[e] += marks[e];
    }
#pragma omp critical
    for (std::size_t e = 0; e < m; ++e) hits[e] += local[e];
  }
  std::vector<ProbabilityEstimate> out;
  out.reserve(m);
  for (std::size_t e = 0; e < m; ++e) out.push_back(make_estimate(hits[e], trials));
  return out;
}

CostStats rounding_cost_stats(const EdgeColoredHypergraph& h, const EccLpSolution& x,
                              Interval interval, std::size_t trials, std::uint64_t seed,
                              bool parallel) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  require_feasible(h, x);
  std::vector<double> costs(trials);
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel if (parallel)
  {
    std::vector<std::uint8_t> marks(h.num_edges());
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < n; ++t) {
      const auto y = round_with(x, draw_rounding(h.num_colors(), interval, derive_seed(seed, t)));
      kernels::mark_mistakes_serial(h, y.values(), marks);
      double cost = 0.0;
      for (EdgeId e = 0; e < h.num_edges(); ++e)
        if (marks[e]) cost += h.weight(e);
      costs[t] = cost;
    }
  }
  // Serial aggregation keeps the result independent of the schedule.
  CostStats out;
  out.trials = trials;
  out.min = *std::min_element(costs.begin(), costs.end());
  out.max = *std::max_element(costs.begin(), costs.end());
  double sum = 0.0;
  for (double c : costs) sum += c;
  out.mean = sum / static_cast<double>(trials);
  double sq = 0.0;
  for (double c : costs) sq += (c - out.mean) * (c - out.mean);
  if (trials > 1) out.std_error = std::sqrt(sq / static_cast<double>(trials - 1) / static_cast<double>(trials));
  return out;
}

SyntheticInstance make_synthetic_solution(SyntheticFamily family, double eps) {
  SyntheticInstance out;
  out.edge = 0;
  EccLpSolution& x = out.x;
  x.num_nodes = 2;
  auto fill = [&](Color k, std::vector<double> u, std::vector<double> v) {
    x.num_colors = k;
    x.x_node = std::move(u);
    x.x_node.insert(x.x_node.end(), v.begin(), v.end());
    out.hypergraph = EdgeColoredHypergraph(2, k, {{{0, 1}, 1, 1.0}});
    x.x_edge = {std::max(x.node(0, 1), x.node(1, 1))};
    x.value = x.x_edge[0];
  };
  switch (family) {
    case SyntheticFamily::two_competitors: {
      if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
      const double low = (1.0 - eps) / 2.0;
      const double high = (1.0 + eps) / 2.0;
      fill(3, {low, high, 1.0}, {low, 1.0, high});
      break;
    }
    case SyntheticFamily::five_colors: {
      const double t = 2.0 / 3.0;
      fill(5, {t, t, t, 1.0, 1.0}, {t, 1.0, 1.0, t, t});
      break;
    }
    case SyntheticFamily::staggered_thresholds:
      fill(4, {0.3, 0.7, 1.0, 1.0}, {0.3, 1.0, 0.8, 0.9});
      break;
  }
  return out;
}

std::vector<std::string> check_threshold_invariants(const EdgeColoredHypergraph& h,
                                                    const EccLpSolution& x, double tol) {
  std::vector<std::string> out;
  const Color k = h.num_colors();
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto z = color_thresholds(h, x, e);
    const double xe = x.x_edge[e];
    if (!z.empty() && 1.0 - z[0] > xe + tol)
      out.push_back("edge " + std::to_string(e) + ": 1 - z_1 = " + std::to_string(1.0 - z[0]) +
                    " exceeds x_e = " + std::to_string(xe));
    if (h.edge_size(e) > 2) continue;
    for (std::size_t t = 1; 2 * t <= k; ++t) {
      double rhs = xe;
      for (std::size_t i = t; i <= 2 * t - 1; ++i) rhs += z[i - 1];
      if (static_cast<double>(t) > rhs + tol)
        out.push_back("edge " + std::to_string(e) + ": t = " + std::to_string(t) +
                      " exceeds x_e + z_t + ... + z_{2t-1} = " + std::to_string(rhs));
    }
  }
  return out;
}

}  // namespace ecc
