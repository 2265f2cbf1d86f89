#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecc/hypergraph.hpp"
#include "ecc/rounding.hpp"

namespace ecc {

enum class Algorithm { mv, pitt, match, hybrid, lp, lp_simple, exact };

/// Accepts mv, pitt, match, hybrid, lp, lp-simple, exact.
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm algo);

struct RunRecord {
  std::string dataset;
  std::string algo;
  std::uint64_t seed = 0;
  double mistakes = 0.0;
  double satisfaction = 1.0;
  std::optional<double> lp_bound;
  std::optional<double> match_bound;
  std::optional<double> mv_bound;
  double ratio = 1.0;
  std::optional<double> accuracy;
  double seconds = 0.0;
  /// Not part of the CSV row.
  NodeColoring coloring;
};

struct SolveConfig {
  Algorithm algo = Algorithm::mv;
  std::uint64_t seed = 0;
  /// Best-of-N: run i uses seed + i; the minimum-mistake run wins, ties to
  /// the earliest.
  std::size_t runs = 1;
  /// Rounding interval for lp; defaults to best_interval(k, max(r, 2)).
  std::optional<Interval> interval;
  bool with_lp_bound = false;
  /// Primal vector of build_ecc_lp(h) from an external solver; skips the
  /// in-library simplex.
  std::optional<std::vector<double>> lp_primal;
  /// Exhaustive-search cap for the exact algorithm.
  double oracle_cap = 1e7;
};

/// Runs one algorithm (best-of-N when runs > 1) and fills every metric.
/// Lower bounds follow the algorithm: the matching bound for pitt, match and
/// hybrid, the majority-vote bound for mv, the LP bound for lp and lp-simple
/// or whenever with_lp_bound is set. `seconds` covers the
/// algorithm runs (and LP solve when rounding) but not bound computation.
RunRecord run_algorithm(std::string dataset, const EdgeColoredHypergraph& h,
                        const std::optional<NodeColoring>& truth, const SolveConfig& config);

inline constexpr std::string_view kCsvHeader =
    "dataset,algo,seed,mistakes,satisfaction,lp_bound,match_bound,mv_bound,ratio,accuracy,seconds";
/// CSV row in kCsvHeader order; absent optionals are empty fields.
std::string to_csv(const RunRecord& record);
std::string to_json(const std::vector<RunRecord>& records);
std::string to_text(const RunRecord& record);

struct ScalingRow {
  std::size_t pins = 0;
  double seconds = 0.0;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  double slope = 0.0;
};

/// Least-squares slope of log(seconds) against log(pins).
double fit_loglog_slope(const std::vector<ScalingRow>& rows);

/// Times `algo` (mv, pitt, match or hybrid) on planted random instances with
/// about `pins` incidences each, keeping the fastest of `repeats` runs.
ScalingReport bench_scaling(Algorithm algo, const std::vector<std::size_t>& pins,
                            std::uint64_t seed, std::size_t repeats = 5);

/// Planted instance with roughly `pins` total incidences, as used by
/// bench_scaling.
EdgeColoredHypergraph scaling_instance(std::size_t pins, std::uint64_t seed);

struct LpComparison {
  double ecc = 0.0;
  double nodemc = 0.0;
  double gap = 0.0;
};

/// Both relaxation values with the reference solver (throws CapacityExceeded
/// for oversized LPs).
LpComparison compare_lp(const EdgeColoredHypergraph& h);

}  // namespace ecc
