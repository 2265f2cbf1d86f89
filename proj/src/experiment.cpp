#include "ecc/experiment.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ecc/combinatorial.hpp"
#include "ecc/ecc_lp.hpp"
#include "ecc/instance_io.hpp"
#include "ecc/oracle.hpp"

namespace ecc {

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "mv") return Algorithm::mv;
  if (name == "pitt") return Algorithm::pitt;
  if (name == "match") return Algorithm::match;
  if (name == "hybrid") return Algorithm::hybrid;
  if (name == "lp") return Algorithm::lp;
  if (name == "lp-simple") return Algorithm::lp_simple;
  if (name == "exact") return Algorithm::exact;
  return std::nullopt;
}

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::mv: return "mv";
    case Algorithm::pitt: return "pitt";
    case Algorithm::match: return "match";
    case Algorithm::hybrid: return "hybrid";
    case Algorithm::lp: return "lp";
    case Algorithm::lp_simple: return "lp-simple";
    case Algorithm::exact: return "exact";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

EccLpSolution lp_solution(const EdgeColoredHypergraph& h, const SolveConfig& config) {
  if (config.lp_primal) return extract_ecc_solution(h, *config.lp_primal);
  return solve_ecc_lp(h);
}

}  // namespace

RunRecord run_algorithm(std::string dataset, const EdgeColoredHypergraph& h,
                        const std::optional<NodeColoring>& truth, const SolveConfig& config) {
  require_valid(h);
  if (config.runs < 1) throw std::invalid_argument("runs must be >= 1");
  RunRecord rec;
  rec.dataset = std::move(dataset);
  rec.algo = std::string(to_string(config.algo));
  rec.seed = config.seed;

  const auto start = Clock::now();
  std::optional<EccLpSolution> x;
  if (config.algo == Algorithm::lp || config.algo == Algorithm::lp_simple)
    x = lp_solution(h, config);

  const bool randomized = config.algo == Algorithm::pitt || config.algo == Algorithm::lp ||
                          config.algo == Algorithm::match || config.algo == Algorithm::hybrid;
  const std::size_t runs = randomized ? config.runs : 1;
  const Interval interval =
      config.interval.value_or(best_interval(h.num_colors(), std::max<std::size_t>(h.rank(), 2)).interval);

  std::vector<NodeColoring> colorings(runs);
  std::vector<double> costs(runs);
  const auto n = static_cast<std::int64_t>(runs);
#pragma omp parallel for schedule(dynamic) if (runs > 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
    // A single run keeps the ascending node order; best-of-N reshuffles it.
    const auto order_seed = runs > 1 ? std::optional(seed) : std::nullopt;
    NodeColoring y;
    switch (config.algo) {
      case Algorithm::mv: y = majority_vote(h); break;
      case Algorithm::pitt: y = pitt_coloring(h, seed, runs > 1).coloring; break;
      case Algorithm::match: y = match_coloring(h, order_seed).coloring; break;
      case Algorithm::hybrid: y = hybrid(h, order_seed).coloring; break;
      case Algorithm::lp: y = gen_color_round(h, *x, interval, seed); break;
      case Algorithm::lp_simple: y = simple_round(*x); break;
      case Algorithm::exact: y = bruteforce_ecc(h, config.oracle_cap).witness; break;
    }
    costs[i] = objective_cost(h, y).total_cost;
    colorings[i] = std::move(y);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs; ++i)
    if (costs[i] < costs[best]) best = i;
  rec.seconds = elapsed(start);

  rec.seed = config.seed + best;
  rec.coloring = std::move(colorings[best]);
  const auto report = truth ? objective_cost(h, rec.coloring, *truth) : objective_cost(h, rec.coloring);
  rec.mistakes = report.total_cost;
  rec.satisfaction = report.edge_satisfaction;
  rec.accuracy = report.accuracy;

  switch (config.algo) {
    case Algorithm::pitt:
    case Algorithm::match:
    case Algorithm::hybrid: rec.match_bound = match_coloring(h).matching_bound; break;
    case Algorithm::mv: rec.mv_bound = mv_lower_bound(h, rec.coloring); break;
    default: break;
  }
  if (x) {
    rec.lp_bound = x->value;
  } else if (config.with_lp_bound) {
    rec.lp_bound = lp_solution(h, config).value;
  }
  rec.ratio = a_posteriori_ratio(rec.mistakes, {rec.lp_bound, rec.match_bound, rec.mv_bound});
  return rec;
}

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

std::string opt(const std::optional<double>& x) { return x ? fmt(*x) : std::string(); }

}  // namespace

std::string to_csv(const RunRecord& r) {
  return r.dataset + "," + r.algo + "," + std::to_string(r.seed) + "," + fmt(r.mistakes) + "," +
         fmt(r.satisfaction) + "," + opt(r.lp_bound) + "," + opt(r.match_bound) + "," +
         opt(r.mv_bound) + "," + fmt(r.ratio) + "," + opt(r.accuracy) + "," + fmt(r.seconds);
}

std::string to_json(const std::vector<RunRecord>& records) {
  auto value = [](const std::optional<double>& x) -> nlohmann::json {
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
  };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) {
    out.push_back({{"dataset", r.dataset},
                   {"algo", r.algo},
                   {"seed", r.seed},
                   {"mistakes", r.mistakes},
                   {"satisfaction", r.satisfaction},
                   {"lp_bound", value(r.lp_bound)},
                   {"match_bound", value(r.match_bound)},
                   {"mv_bound", value(r.mv_bound)},
                   {"ratio", std::isfinite(r.ratio) ? nlohmann::json(r.ratio) : nlohmann::json("inf")},
                   {"accuracy", value(r.accuracy)},
                   {"seconds", r.seconds}});
  }
  return out.dump(2);
}

std::string to_text(const RunRecord& r) {
  std::string out = r.dataset + " [" + r.algo + ", seed " + std::to_string(r.seed) + "]\n";
  out += "  mistakes      " + fmt(r.mistakes) + "\n";
  out += "  satisfaction  " + fmt(r.satisfaction) + "\n";
  if (r.lp_bound) out += "  lp bound      " + fmt(*r.lp_bound) + "\n";
  if (r.match_bound) out += "  match bound   " + fmt(*r.match_bound) + "\n";
  if (r.mv_bound) out += "  mv bound      " + fmt(*r.mv_bound) + "\n";
  out += "  ratio         " + fmt(r.ratio) + "\n";
  if (r.accuracy) out += "  accuracy      " + fmt(*r.accuracy) + "\n";
  out += "  seconds       " + fmt(r.seconds) + "\n";
  return out;
}

double fit_loglog_slope(const std::vector<ScalingRow>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("need at least two sizes to fit a slope");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double lx = std::log(static_cast<double>(r.pins));
    const double ly = std::log(std::max(r.seconds, 1e-9));
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  const double n = static_cast<double>(rows.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

EdgeColoredHypergraph scaling_instance(std::size_t pins, std::uint64_t seed) {
  RandomInstanceParams p;
  p.max_edge_size = 4;
  p.num_edges = std::max<std::size_t>(1, pins / 3);
  p.num_nodes = std::max<std::size_t>(2, p.num_edges / 2);
  p.num_colors = 8;
  p.noise = 0.2;
  p.seed = seed;
  return gen_random(p).hypergraph;
}

ScalingReport bench_scaling(Algorithm algo, const std::vector<std::size_t>& pins,
                            std::uint64_t seed, std::size_t repeats) {
  if (algo != Algorithm::mv && algo != Algorithm::pitt && algo != Algorithm::match &&
      algo != Algorithm::hybrid)
    throw std::invalid_argument("bench-scaling supports mv, pitt, match, hybrid");
  ScalingReport report;
  for (std::size_t target : pins) {
    const auto h = scaling_instance(target, seed);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t rep = 0; rep < std::max<std::size_t>(repeats, 1); ++rep) {
      const auto start = Clock::now();
      switch (algo) {
        case Algorithm::mv: majority_vote(h); break;
        case Algorithm::pitt: pitt_coloring(h, seed + rep); break;
        case Algorithm::match: match_coloring(h); break;
        default: hybrid(h); break;
      }
      best = std::min(best, elapsed(start));
    }
    report.rows.push_back({h.total_pins(), best});
  }
  report.slope = fit_loglog_slope(report.rows);
  return report;
}

LpComparison compare_lp(const EdgeColoredHypergraph& h) {
  LpComparison out;
  out.ecc = solve_ecc_lp(h).value;
  out.nodemc = solve_value(build_nodemc_lp(h));
  out.gap = out.ecc - out.nodemc;
  return out;
}

}  // namespace ecc
