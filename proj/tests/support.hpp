#pragma once

// Independent reference routines used as test oracles. They share no code
// with the library beyond the data model.

#include <cstdint>
#include <limits>
#include <vector>

#include "ecc/hypergraph.hpp"
#include "ecc/instance_io.hpp"
#include "ecc/reductions.hpp"

namespace testing {

using namespace ecc;

inline double naive_cost(const EdgeColoredHypergraph& h, const std::vector<Color>& y) {
  double cost = 0.0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    bool mistake = false;
    for (NodeId v : h.members(e)) mistake = mistake || y[v] != h.color(e);
    if (mistake) cost += h.weight(e);
  }
  return cost;
}

/// Minimum over all k^n colorings, odometer order. Only for tiny instances.
inline double enumerate_opt(const EdgeColoredHypergraph& h) {
  const std::size_t n = h.num_nodes();
  std::vector<Color> y(n, 1);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    best = std::min(best, naive_cost(h, y));
    std::size_t i = 0;
    while (i < n && y[i] == h.num_colors()) y[i++] = 1;
    if (i == n) break;
    ++y[i];
  }
  return best;
}

/// Minimum-weight vertex cover over all 2^n subsets.
inline double enumerate_vc(const WeightedGraph& g) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_nodes); ++mask) {
    bool cover = true;
    for (auto [u, v] : g.edges) cover = cover && (((mask >> u) & 1) || ((mask >> v) & 1));
    if (!cover) continue;
    double w = 0.0;
    for (std::size_t u = 0; u < g.num_nodes; ++u)
      if ((mask >> u) & 1) w += g.weights[u];
    best = std::min(best, w);
  }
  return best;
}

/// Bad pairs counted straight from the definition over all edge pairs.
inline std::size_t naive_bad_pairs(const EdgeColoredHypergraph& h) {
  std::size_t count = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    for (EdgeId f = e + 1; f < h.num_edges(); ++f) {
      if (h.color(e) == h.color(f)) continue;
      bool overlap = false;
      for (NodeId u : h.members(e))
        for (NodeId v : h.members(f)) overlap = overlap || u == v;
      count += overlap;
    }
  return count;
}

inline PlantedInstance small_random(std::uint64_t seed, std::size_t n = 7, std::size_t m = 9,
                                    Color k = 3, std::size_t max_size = 3, double noise = 0.4) {
  RandomInstanceParams p;
  p.num_nodes = n;
  p.num_edges = m;
  p.num_colors = k;
  p.max_edge_size = max_size;
  p.noise = noise;
  p.seed = seed;
  return gen_random(p);
}

}  // namespace testing
