#include "ecc/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ecc/kernels.hpp"

namespace ecc {

EdgeColoredHypergraph::EdgeColoredHypergraph(std::size_t num_nodes, Color num_colors,
                                             std::vector<EdgeSpec> edges)
    : num_nodes_(num_nodes), num_colors_(num_colors) {
  offsets_.reserve(edges.size() + 1);
  colors_.reserve(edges.size());
  weights_.reserve(edges.size());
  std::size_t pins = 0;
  for (const auto& e : edges) pins += e.members.size();
  pins_.reserve(pins);

  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& m = edges[i].members;
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.empty())
      throw std::invalid_argument("edge " + std::to_string(i) + " has no members");
    pins_.insert(pins_.end(), m.begin(), m.end());
    offsets_.push_back(pins_.size());
    colors_.push_back(edges[i].color);
    weights_.push_back(edges[i].weight);
    rank_ = std::max(rank_, m.size());
  }
}

double EdgeColoredHypergraph::total_weight() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

bool EdgeColoredHypergraph::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
}

bool EdgeColoredHypergraph::uniform_weights() const noexcept {
  return weights_.empty() ||
         std::all_of(weights_.begin(), weights_.end(), [&](double w) { return w == weights_[0]; });
}

std::vector<EdgeSpec> EdgeColoredHypergraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto m = members(e);
    out.push_back({{m.begin(), m.end()}, colors_[e], weights_[e]});
  }
  return out;
}

std::vector<std::string> validate(const EdgeColoredHypergraph& h) {
  std::vector<std::string> problems;
  std::size_t rank = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto m = h.members(e);
    const std::string tag = "edge " + std::to_string(e) + ": ";
    if (m.empty()) problems.push_back(tag + "empty");
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] >= h.num_nodes())
        problems.push_back(tag + "member " + std::to_string(m[i]) + " out of range [0, " +
                           std::to_string(h.num_nodes()) + ")");
      if (i > 0 && m[i] == m[i - 1]) problems.push_back(tag + "duplicate member");
    }
    if (h.color(e) < 1 || h.color(e) > h.num_colors())
      problems.push_back(tag + "color " + std::to_string(h.color(e)) + " out of range [1, " +
                         std::to_string(h.num_colors()) + "]");
    if (!(h.weight(e) >= 0.0) || !std::isfinite(h.weight(e)))
      problems.push_back(tag + "weight must be finite and nonnegative");
    rank = std::max(rank, m.size());
  }
  if (rank != h.rank()) problems.push_back("rank does not equal the maximum edge size");
  return problems;
}

void require_valid(const EdgeColoredHypergraph& h) {
  auto problems = validate(h);
  if (!problems.empty()) throw std::invalid_argument("invalid hypergraph: " + problems.front());
}

std::vector<std::string> validate(const EdgeColoredHypergraph& h, const NodeColoring& y) {
  std::vector<std::string> problems;
  if (y.size() != h.num_nodes()) {
    problems.push_back("coloring has " + std::to_string(y.size()) + " entries, expected " +
                       std::to_string(h.num_nodes()));
    return problems;
  }
  for (std::size_t v = 0; v < y.size(); ++v)
    if (y[v] < 1 || y[v] > h.num_colors())
      problems.push_back("node " + std::to_string(v) + ": color " + std::to_string(y[v]) +
                         " out of range");
  return problems;
}

CostReport objective_cost(const EdgeColoredHypergraph& h, const NodeColoring& y) {
  if (y.size() != h.num_nodes())
    throw std::invalid_argument("coloring length " + std::to_string(y.size()) +
                                " does not match node count " + std::to_string(h.num_nodes()));
  std::vector<std::uint8_t> flags(h.num_edges());
  kernels::mark_mistakes(h, y.values(), flags);

  CostReport report;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!flags[e]) continue;
    report.mistake_edges.push_back(e);
    report.total_cost += h.weight(e);
  }
  if (h.num_edges() > 0)
    report.edge_satisfaction =
        1.0 - static_cast<double>(report.mistake_edges.size()) / static_cast<double>(h.num_edges());
  return report;
}

CostReport objective_cost(const EdgeColoredHypergraph& h, const NodeColoring& y,
                          const NodeColoring& truth) {
  auto report = objective_cost(h, y);
  report.accuracy = accuracy(y, truth);
  return report;
}

double accuracy(const NodeColoring& y, const NodeColoring& truth) {
  if (y.size() != truth.size())
    throw std::invalid_argument("coloring and ground truth differ in length");
  if (y.size() == 0) return 1.0;
  std::size_t agree = 0;
  for (std::size_t v = 0; v < y.size(); ++v) agree += (y[v] == truth[v]);
  return static_cast<double>(agree) / static_cast<double>(y.size());
}

ColorSortedIncidence build_incidence(const EdgeColoredHypergraph& h) {
  const std::size_t n = h.num_nodes();
  const std::size_t m = h.num_edges();

  // Counting sort of edge indices by color; stable, so ties keep index order.
  std::vector<std::size_t> color_start(static_cast<std::size_t>(h.num_colors()) + 2, 0);
  for (EdgeId e = 0; e < m; ++e) ++color_start[h.color(e) + 1];
  std::partial_sum(color_start.begin(), color_start.end(), color_start.begin());
  std::vector<EdgeId> by_color(m);
  for (EdgeId e = 0; e < m; ++e) by_color[color_start[h.color(e)]++] = e;

  std::vector<std::size_t> offsets(n + 1, 0);
  for (EdgeId e = 0; e < m; ++e)
    for (NodeId v : h.members(e)) ++offsets[v + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  std::vector<EdgeId> lists(h.total_pins());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (EdgeId e : by_color)
    for (NodeId v : h.members(e)) lists[cursor[v]++] = e;
  return {std::move(offsets), std::move(lists)};
}

}  // namespace ecc
