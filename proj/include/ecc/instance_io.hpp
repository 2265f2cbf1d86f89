#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ecc/hypergraph.hpp"

namespace ecc {

/// Canonical text format:
///
///   # comment
///   ecc <num_nodes> <num_edges> <num_colors>
///   <color> <weight> <node> <node> ...      (one line per edge, 0-based ids)
///
/// CRLF line endings are accepted. Errors throw ParseError with the line number.
EdgeColoredHypergraph parse_canonical(std::string_view text);
std::string write_canonical(const EdgeColoredHypergraph& h);

/// Ground-truth coloring file: one color per line.
NodeColoring parse_coloring(std::string_view text);
std::string write_coloring(const NodeColoring& y);

struct BenchmarkInstance {
  EdgeColoredHypergraph hypergraph;
  std::optional<NodeColoring> truth;
};

/// Published two-file benchmark format: `edges_text` has one edge per line as
/// whitespace- or comma-separated 1-based node ids, `labels_text` one integer
/// color per line, `node_labels_text` (optional) one ground-truth color per
/// node. Unit weights; k is the largest label seen.
BenchmarkInstance parse_benchmark(std::string_view edges_text, std::string_view labels_text,
                                  std::optional<std::string_view> node_labels_text = {});

struct PlantedInstance {
  EdgeColoredHypergraph hypergraph;
  NodeColoring truth;
  double noise = 0.0;
};

/// Integrality-gap instance: one edge per color, one node per color pair.
/// Requires k >= 3.
EdgeColoredHypergraph gen_integrality_gap(Color k);

/// Star with center 0 and leaves 1..3; edge (0,i) has color i.
EdgeColoredHypergraph gen_star();

struct RandomInstanceParams {
  std::size_t num_nodes = 20;
  std::size_t num_edges = 40;
  std::size_t max_edge_size = 3;
  Color num_colors = 3;
  double noise = 0.0;
  std::uint64_t seed = 0;
};

/// Planted instance: truth is uniform over colors; each edge draws a size in
/// [2, max_edge_size] and members from one truth class (capped at the class
/// size, so edges can be smaller), takes the class color, and with probability `noise`
/// has its color resampled uniformly. Pure function of the parameters.
PlantedInstance gen_random(const RandomInstanceParams& params);

/// Read a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ecc
