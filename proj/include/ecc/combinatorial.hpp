#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ecc/hypergraph.hpp"

namespace ecc {

/// Set of deleted hyperedges; MinECC is equivalent to deleting a minimum
/// weight set of edges so that no bad edge pair survives.
class DeletionSet {
 public:
  DeletionSet() = default;
  explicit DeletionSet(std::size_t num_edges) : deleted_(num_edges, 0) {}

  std::size_t num_edges() const noexcept { return deleted_.size(); }
  bool contains(EdgeId e) const { return deleted_[e] != 0; }
  /// Returns false if e was already present.
  bool insert(EdgeId e, double weight);
  std::size_t size() const noexcept { return count_; }
  double weight() const noexcept { return weight_; }
  std::vector<EdgeId> edges() const;

  friend bool operator==(const DeletionSet&, const DeletionSet&) = default;

 private:
  std::vector<std::uint8_t> deleted_;
  std::size_t count_ = 0;
  double weight_ = 0.0;
};

/// Work done by a cursor walk: one unit per cursor step and per deletion.
struct OperationCounts {
  std::size_t cursor_steps = 0;
  std::size_t deletions = 0;
  std::size_t total() const noexcept { return cursor_steps + deletions; }
};

struct CoverResult {
  DeletionSet deletions;
  NodeColoring coloring;
  OperationCounts ops;
};

struct MatchResult {
  DeletionSet deletions;
  NodeColoring coloring;
  OperationCounts ops;
  std::size_t pairs = 0;
  /// Sum over matched pairs of min(w_e, w_f); the pair count for unit weights.
  double matching_bound = 0.0;
  /// The 2-approximation argument only covers uniform weights.
  bool guarantee_applies = false;
};

struct HybridResult {
  NodeColoring coloring;
  /// Set when recoloring uncovered nodes by majority vote would have cost
  /// more than the plain MatchColoring output, which is returned instead.
  bool kept_match_coloring = false;
};

struct LowerBoundBundle {
  std::optional<double> lp_bound;
  std::optional<double> matching_bound;
  std::optional<double> mv_bound;
};

/// Weighted majority color per node; ties to the lowest color, isolated nodes
/// to color 1. O(sum |e|).
NodeColoring majority_vote(const EdgeColoredHypergraph& h);

/// (sum_e w_e * #{v in e : Y[v] != color(e)}) / r, a lower bound on OPT when
/// Y is the majority-vote coloring. 0 for an edgeless hypergraph.
double mv_lower_bound(const EdgeColoredHypergraph& h, const NodeColoring& y_mv);

/// Some bad pair of surviving edges (overlapping, different colors), found by
/// one scan over the incidences; nullopt if none survives.
std::optional<std::pair<EdgeId, EdgeId>> find_bad_pair(const EdgeColoredHypergraph& h,
                                                       const DeletionSet& deleted);

/// Colors every node of a surviving edge with that edge's color and all other
/// nodes with color 1. Throws VerificationFailure if a bad pair survives.
NodeColoring coloring_from_deletions(const EdgeColoredHypergraph& h, const DeletionSet& deleted);

/// Implicit Pitt vertex cover on the bad-pair graph: at each node, compare the
/// first and last surviving edges of its color-sorted list and delete one of
/// them at random (the lighter one more often) until the colors agree.
/// Nodes are visited in ascending order, or in a seeded random order when
/// `shuffle_nodes` is set.
CoverResult pitt_coloring(const EdgeColoredHypergraph& h, std::uint64_t seed,
                          bool shuffle_nodes = false);

/// Same walk, deleting both edges of each mismatched pair (a maximal set of
/// edge-disjoint bad pairs). Deterministic; `order_seed` shuffles the node
/// visit order.
MatchResult match_coloring(const EdgeColoredHypergraph& h,
                           std::optional<std::uint64_t> order_seed = std::nullopt);

/// MatchColoring, then nodes left without a surviving edge take their
/// majority-vote color. Never costs more than MatchColoring.
HybridResult hybrid(const EdgeColoredHypergraph& h,
                    std::optional<std::uint64_t> order_seed = std::nullopt);

/// cost / max(available bounds); 1 when cost is 0, infinity when no bound is
/// positive.
double a_posteriori_ratio(double cost, const LowerBoundBundle& bounds);

}  // namespace ecc
