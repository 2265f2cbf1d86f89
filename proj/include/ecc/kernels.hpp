#pragma once

// Data-parallel inner loops. Each OpenMP kernel has a plain serial reference
// that is kept for testing and benchmarking; both must produce identical
// results for identical input.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ecc/hypergraph.hpp"

namespace ecc::kernels {

/// out[e] = 1 iff some node of e has a color different from color(e).
void mark_mistakes(const EdgeColoredHypergraph& h, std::span<const Color> y,
                   std::span<std::uint8_t> out);
void mark_mistakes_serial(const EdgeColoredHypergraph& h, std::span<const Color> y,
                          std::span<std::uint8_t> out);

/// Weighted majority color per node from the color-sorted incidence lists
/// (run-length sums over each list). Ties go to the lowest color; isolated
/// nodes get color 1.
std::vector<Color> majority_colors(const EdgeColoredHypergraph& h,
                                   const ColorSortedIncidence& incidence);
/// Reference: edge-driven accumulation into a dense |V| x k table.
std::vector<Color> majority_colors_serial(const EdgeColoredHypergraph& h);

/// Gauss-Jordan elimination step on a row-major tableau with `rows` rows of
/// `cols` doubles: every row except `pivot_row` gets `row -= row[pivot_col] *
/// tableau[pivot_row]`. The pivot row must already be normalized. `pivot_nz`
/// lists the nonzero columns of the pivot row (the update only touches those).
void eliminate(std::span<double> tableau, std::size_t rows, std::size_t cols,
               std::size_t pivot_row, std::size_t pivot_col,
               std::span<const std::size_t> pivot_nz);
void eliminate_serial(std::span<double> tableau, std::size_t rows, std::size_t cols,
                      std::size_t pivot_row, std::size_t pivot_col,
                      std::span<const std::size_t> pivot_nz);

/// Number of OpenMP threads the parallel kernels will use.
int max_threads();

}  // namespace ecc::kernels
