#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecc/combinatorial.hpp"
#include "ecc/hypergraph.hpp"

namespace ecc {

struct Terminal {
  std::size_t node;
  Color color;
  bool operator==(const Terminal&) const = default;
};

/// Undirected node-weighted graph, optionally with colored terminals. Nodes
/// flagged undeletable stand in for infinite weight.
struct WeightedGraph {
  std::size_t num_nodes = 0;
  std::vector<double> weights;
  std::vector<std::uint8_t> undeletable;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<Terminal> terminals;

  explicit WeightedGraph(std::size_t n = 0) : num_nodes(n), weights(n, 1.0), undeletable(n, 0) {}
  void add_edge(std::size_t u, std::size_t v) { edges.emplace_back(u, v); }
  std::size_t max_degree() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

/// Empty iff endpoints are in range, there are no self-loops, weights are
/// nonnegative, and terminals are distinct.
std::vector<std::string> validate(const WeightedGraph& g);

/// Text form: "vc <n> <m>", then "w <i> <weight|inf>", "e <u> <v>", "t <i> <color>".
std::string write_graph(const WeightedGraph& g);
WeightedGraph parse_graph(std::string_view text);

/// Conflict graph: node i is hyperedge i (weight w_i), one edge per bad pair.
/// Graph node indices equal hyperedge indices.
WeightedGraph ecc_to_vertex_cover(const EdgeColoredHypergraph& h);

/// Number of bad edge pairs, by the same pairwise scan.
std::size_t count_bad_pairs(const EdgeColoredHypergraph& h);

struct VertexCoverEcc {
  EdgeColoredHypergraph hypergraph;
  /// hyperedge_of[u] is the hyperedge built for graph node u (nullopt when u
  /// is isolated and its hyperedge would be empty).
  std::vector<std::optional<EdgeId>> hyperedge_of;
  /// graph_node_of[e] inverts hyperedge_of.
  std::vector<std::size_t> graph_node_of;
};

/// One hypergraph node per graph edge; hyperedge e_u with unique color u+1 and
/// weight w_u per non-isolated graph node u, containing the nodes of u's
/// incident graph edges.
VertexCoverEcc vertex_cover_to_ecc(const WeightedGraph& g);

/// Node-MC instance: original nodes 0..|V|-1 (undeletable), edge-nodes
/// |V|..|V|+|E|-1 with weight w_e, terminals t_i at |V|+|E|+i-1 (undeletable).
WeightedGraph ecc_to_node_mc(const EdgeColoredHypergraph& h);

struct HyperMcInstance {
  /// Original nodes followed by k terminals; edge e gains t_{color(e)}.
  std::size_t num_nodes = 0;
  std::vector<std::vector<NodeId>> edges;
  std::vector<double> weights;
  std::vector<NodeId> terminals;
};
HyperMcInstance ecc_to_hyper_mc(const EdgeColoredHypergraph& h);

/// Vertex cover of ecc_to_vertex_cover(h) (graph node indices) to the deletion
/// set with the same edges. Throws VerificationFailure if it is not a cover.
DeletionSet cover_to_deletions(const EdgeColoredHypergraph& h, const std::vector<std::size_t>& cover);
/// Inverse; throws VerificationFailure if a bad pair survives `deleted`.
std::vector<std::size_t> deletions_to_cover(const EdgeColoredHypergraph& h,
                                            const DeletionSet& deleted);

}  // namespace ecc
