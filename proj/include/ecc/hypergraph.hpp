#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecc {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
/// Colors are 1-based, in [1..k].
using Color = std::uint32_t;

/// Input record for one hyperedge. Members may be unsorted and contain
/// duplicates; the hypergraph constructor normalizes them.
struct EdgeSpec {
  std::vector<NodeId> members;
  Color color = 1;
  double weight = 1.0;
};

/// An edge-colored hypergraph H = (V, E, C, l) with nonnegative edge weights.
///
/// Edges are stored in compressed form (offsets into one pin array). Members of
/// each edge are sorted and deduplicated at construction; an edge that is empty
/// after deduplication is rejected with std::invalid_argument. Range problems
/// (node id, color, weight) are not rejected here so that validate() can report
/// them; every algorithm in the library assumes validate(H) is empty.
class EdgeColoredHypergraph {
 public:
  EdgeColoredHypergraph() = default;
  EdgeColoredHypergraph(std::size_t num_nodes, Color num_colors, std::vector<EdgeSpec> edges);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t num_edges() const noexcept { return colors_.size(); }
  Color num_colors() const noexcept { return num_colors_; }
  /// Maximum edge size (0 for an edgeless hypergraph).
  std::size_t rank() const noexcept { return rank_; }
  /// Sum of |e| over all edges.
  std::size_t total_pins() const noexcept { return pins_.size(); }

  std::span<const NodeId> members(EdgeId e) const noexcept {
    return {pins_.data() + offsets_[e], pins_.data() + offsets_[e + 1]};
  }
  std::size_t edge_size(EdgeId e) const noexcept { return offsets_[e + 1] - offsets_[e]; }
  Color color(EdgeId e) const noexcept { return colors_[e]; }
  double weight(EdgeId e) const noexcept { return weights_[e]; }
  double total_weight() const noexcept;
  bool unit_weights() const noexcept;
  bool uniform_weights() const noexcept;

  std::span<const Color> colors() const noexcept { return colors_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Copy out the edge list, e.g. to build a modified instance.
  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const EdgeColoredHypergraph&, const EdgeColoredHypergraph&) = default;

 private:
  std::size_t num_nodes_ = 0;
  Color num_colors_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> pins_;
  std::vector<Color> colors_;
  std::vector<double> weights_;
};

/// A map Y from nodes to colors.
class NodeColoring {
 public:
  NodeColoring() = default;
  explicit NodeColoring(std::size_t num_nodes, Color fill = 1) : colors_(num_nodes, fill) {}
  explicit NodeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  std::size_t size() const noexcept { return colors_.size(); }
  Color& operator[](std::size_t v) { return colors_[v]; }
  Color operator[](std::size_t v) const { return colors_[v]; }
  std::span<const Color> values() const noexcept { return colors_; }
  auto begin() const noexcept { return colors_.begin(); }
  auto end() const noexcept { return colors_.end(); }

  friend bool operator==(const NodeColoring&, const NodeColoring&) = default;

 private:
  std::vector<Color> colors_;
};

struct CostReport {
  double total_cost = 0.0;
  std::vector<EdgeId> mistake_edges;
  /// Unweighted fraction of edges that are not mistakes (1 for an edgeless H).
  double edge_satisfaction = 1.0;
  std::optional<double> accuracy;
};

/// Per-node incident edge lists L_E(v), each ordered by edge color and then by
/// edge index.
class ColorSortedIncidence {
 public:
  ColorSortedIncidence() = default;
  ColorSortedIncidence(std::vector<std::size_t> offsets, std::vector<EdgeId> edges)
      : offsets_(std::move(offsets)), edges_(std::move(edges)) {}

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const EdgeId> edges_of(NodeId v) const noexcept {
    return {edges_.data() + offsets_[v], edges_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::span<const EdgeId> flat() const noexcept { return edges_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> edges_;
};

/// Human-readable list of invariant violations; empty iff H is well formed.
std::vector<std::string> validate(const EdgeColoredHypergraph& h);

/// Throws std::invalid_argument with the first violation, if any.
void require_valid(const EdgeColoredHypergraph& h);

/// Empty iff Y has one in-range color per node of H.
std::vector<std::string> validate(const EdgeColoredHypergraph& h, const NodeColoring& y);

/// MinECC objective: total weight of edges containing a node whose color
/// differs from the edge color. Throws std::invalid_argument on a size mismatch.
CostReport objective_cost(const EdgeColoredHypergraph& h, const NodeColoring& y);

/// Same as objective_cost but also fills CostReport::accuracy.
CostReport objective_cost(const EdgeColoredHypergraph& h, const NodeColoring& y,
                          const NodeColoring& truth);

/// Fraction of positions where y agrees with truth.
double accuracy(const NodeColoring& y, const NodeColoring& truth);

/// Counting sort of incidences on edge color; O(sum |e| + k).
ColorSortedIncidence build_incidence(const EdgeColoredHypergraph& h);

}  // namespace ecc
