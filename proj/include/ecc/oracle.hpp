#pragma once

#include <cstdint>
#include <vector>

#include "ecc/hypergraph.hpp"
#include "ecc/reductions.hpp"

namespace ecc {

inline constexpr double kDefaultOracleCap = 1e7;

/// Cap from the ECC_ORACLE_CAP environment variable, else the default.
double oracle_cap_from_env();

struct EccOracleResult {
  double value = 0.0;
  NodeColoring witness;
  /// Search nodes visited.
  std::uint64_t explored = 0;
};

/// Exact MinECC by branch and bound over the colors each non-isolated node can
/// usefully take (the colors of its incident edges); isolated nodes get color
/// 1. Refuses with CapacityExceeded when the product of those per-node choice
/// counts exceeds `cap`.
EccOracleResult bruteforce_ecc(const EdgeColoredHypergraph& h, double cap = kDefaultOracleCap);

struct VcOracleResult {
  double value = 0.0;
  /// Sorted node indices of one minimum-weight cover.
  std::vector<std::size_t> cover;
  std::uint64_t explored = 0;
};

/// Exact minimum-weight vertex cover. Degree-0 nodes are pruned; refuses with
/// CapacityExceeded when 2^(remaining nodes) exceeds `cap`.
VcOracleResult bruteforce_vc(const WeightedGraph& g, double cap = kDefaultOracleCap);

}  // namespace ecc
