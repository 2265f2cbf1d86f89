#include "ecc/kernels.hpp"

#include <omp.h>

#include <cstdint>

namespace ecc::kernels {

namespace {

inline std::uint8_t edge_is_mistake(const EdgeColoredHypergraph& h, std::span<const Color> y,
                                    EdgeId e) {
  const Color c = h.color(e);
  for (NodeId v : h.members(e))
    if (y[v] != c) return 1;
  return 0;
}

inline Color majority_of(const EdgeColoredHypergraph& h, std::span<const EdgeId> list) {
  Color best = 1;
  double best_weight = -1.0;
  std::size_t i = 0;
  while (i < list.size()) {
    const Color c = h.color(list[i]);
    double run = 0.0;
    for (; i < list.size() && h.color(list[i]) == c; ++i) run += h.weight(list[i]);
    // Colors arrive in increasing order, so strict > keeps the lowest on ties.
    if (run > best_weight) {
      best_weight = run;
      best = c;
    }
  }
  return best;
}

}  // namespace

void mark_mistakes(const EdgeColoredHypergraph& h, std::span<const Color> y,
                   std::span<std::uint8_t> out) {
  const auto m = static_cast<std::int64_t>(h.num_edges());
#pragma omp parallel for schedule(static)
  for (std::int64_t e = 0; e < m; ++e) out[e] = edge_is_mistake(h, y, static_cast<EdgeId>(e));
}

void mark_mistakes_serial(const EdgeColoredHypergraph& h, std::span<const Color> y,
                          std::span<std::uint8_t> out) {
  for (EdgeId e = 0; e < h.num_edges(); ++e) out[e] = edge_is_mistake(h, y, e);
}

std::vector<Color> majority_colors(const EdgeColoredHypergraph& h,
                                   const ColorSortedIncidence& incidence) {
  const auto n = static_cast<std::int64_t>(h.num_nodes());
  std::vector<Color> out(h.num_nodes(), 1);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t v = 0; v < n; ++v)
    out[v] = majority_of(h, incidence.edges_of(static_cast<NodeId>(v)));
  return out;
}

std::vector<Color> majority_colors_serial(const EdgeColoredHypergraph& h) {
  const std::size_t k = h.num_colors();
  // -1 marks a color that never occurs on v, so it cannot beat an incident
  // zero-weight color.
  std::vector<double> score(h.num_nodes() * k, -1.0);
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    for (NodeId v : h.members(e)) {
      double& s = score[v * k + (h.color(e) - 1)];
      s = (s < 0.0 ? 0.0 : s) + h.weight(e);
    }
  std::vector<Color> out(h.num_nodes(), 1);
  for (std::size_t v = 0; v < h.num_nodes(); ++v) {
    double best = -1.0;
    for (std::size_t c = 0; c < k; ++c) {
      const double s = score[v * k + c];
      if (s > best) {
        best = s;
        out[v] = static_cast<Color>(c + 1);
      }
    }
  }
  return out;
}

void eliminate(std::span<double> tableau, std::size_t rows, std::size_t cols,
               std::size_t pivot_row, std::size_t pivot_col,
               std::span<const std::size_t> pivot_nz) {
  const double* prow = tableau.data() + pivot_row * cols;
  const auto nrows = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) if (rows * pivot_nz.size() > 32768)
  for (std::int64_t i = 0; i < nrows; ++i) {
    if (static_cast<std::size_t>(i) == pivot_row) continue;
    double* row = tableau.data() + static_cast<std::size_t>(i) * cols;
    const double factor = row[pivot_col];
    if (factor == 0.0) continue;
    for (std::size_t j : pivot_nz) row[j] -= factor * prow[j];
    row[pivot_col] = 0.0;
  }
}

void eliminate_serial(std::span<double> tableau, std::size_t rows, std::size_t cols,
                      std::size_t pivot_row, std::size_t pivot_col,
                      std::span<const std::size_t> pivot_nz) {
  const double* prow = tableau.data() + pivot_row * cols;
  for (std::size_t i = 0; i < rows; ++i) {
    if (i == pivot_row) continue;
    double* row = tableau.data() + i * cols;
    const double factor = row[pivot_col];
    if (factor == 0.0) continue;
    for (std::size_t j : pivot_nz) row[j] -= factor * prow[j];
    row[pivot_col] = 0.0;
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace ecc::kernels
