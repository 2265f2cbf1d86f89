#include "ecc/combinatorial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ecc/errors.hpp"
#include "ecc/kernels.hpp"
#include "ecc/random.hpp"

namespace ecc {

bool DeletionSet::insert(EdgeId e, double weight) {
  if (deleted_[e]) return false;
  deleted_[e] = 1;
  ++count_;
  weight_ += weight;
  return true;
}

std::vector<EdgeId> DeletionSet::edges() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for (EdgeId e = 0; e < deleted_.size(); ++e)
    if (deleted_[e]) out.push_back(e);
  return out;
}

NodeColoring majority_vote(const EdgeColoredHypergraph& h) {
  return NodeColoring(kernels::majority_colors(h, build_incidence(h)));
}

double mv_lower_bound(const EdgeColoredHypergraph& h, const NodeColoring& y_mv) {
  if (h.num_edges() == 0) return 0.0;
  double mismatched = 0.0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::size_t count = 0;
    for (NodeId v : h.members(e)) count += y_mv[v] != h.color(e);
    mismatched += h.weight(e) * static_cast<double>(count);
  }
  return mismatched / static_cast<double>(h.rank());
}

std::optional<std::pair<EdgeId, EdgeId>> find_bad_pair(const EdgeColoredHypergraph& h,
                                                       const DeletionSet& deleted) {
  constexpr EdgeId none = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> seen(h.num_nodes(), none);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (deleted.contains(e)) continue;
    for (NodeId v : h.members(e)) {
      if (seen[v] == none)
        seen[v] = e;
      else if (h.color(seen[v]) != h.color(e))
        return std::pair{seen[v], e};
    }
  }
  return std::nullopt;
}

NodeColoring coloring_from_deletions(const EdgeColoredHypergraph& h, const DeletionSet& deleted) {
  if (const auto bad = find_bad_pair(h, deleted))
    throw VerificationFailure("deletion set leaves bad pair (" + std::to_string(bad->first) +
                              ", " + std::to_string(bad->second) + ")");
  NodeColoring y(h.num_nodes(), 1);
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (!deleted.contains(e))
      for (NodeId v : h.members(e)) y[v] = h.color(e);
  return y;
}

namespace {

std::vector<NodeId> visit_order(std::size_t n, std::optional<std::uint64_t> seed) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  if (seed) {
    Rng rng = make_rng(derive_seed(*seed, 0x6f72646572ULL));
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

// Walks L_E(v) with front and back cursors over surviving edges. `resolve`
// receives the front and back edges of a mismatched pair and returns which of
// them to delete (bit 0 front, bit 1 back).
template <typename Resolve>
void cursor_walk(const EdgeColoredHypergraph& h, const ColorSortedIncidence& inc,
                 const std::vector<NodeId>& order, DeletionSet& deleted, OperationCounts& ops,
                 Resolve&& resolve) {
  for (NodeId v : order) {
    const auto list = inc.edges_of(v);
    if (list.size() < 2) continue;
    std::size_t f = 0;
    std::size_t b = list.size() - 1;
    while (true) {
      while (f < b && deleted.contains(list[f])) ++f, ++ops.cursor_steps;
      while (f < b && deleted.contains(list[b])) --b, ++ops.cursor_steps;
      if (f >= b) break;
      const EdgeId ef = list[f];
      const EdgeId eb = list[b];
      if (h.color(ef) == h.color(eb)) break;
      const unsigned which = resolve(ef, eb);
      if (which & 1u) {
        deleted.insert(ef, h.weight(ef));
        ++ops.deletions;
        ++f, ++ops.cursor_steps;
      }
      if (which & 2u) {
        deleted.insert(eb, h.weight(eb));
        ++ops.deletions;
        --b, ++ops.cursor_steps;
      }
    }
  }
}

}  // namespace

CoverResult pitt_coloring(const EdgeColoredHypergraph& h, std::uint64_t seed, bool shuffle_nodes) {
  const auto inc = build_incidence(h);
  const auto order = visit_order(h.num_nodes(), shuffle_nodes ? std::optional(seed) : std::nullopt);
  CoverResult out{DeletionSet(h.num_edges()), {}, {}};
  Rng rng = make_rng(seed);
  cursor_walk(h, inc, order, out.deletions, out.ops, [&](EdgeId ef, EdgeId eb) -> unsigned {
    const double wf = h.weight(ef);
    const double wb = h.weight(eb);
    if (wf + wb <= 0.0) return 3u;
    return uniform_open01(rng) < wf / (wf + wb) ? 2u : 1u;
  });
  out.coloring = coloring_from_deletions(h, out.deletions);
  return out;
}

MatchResult match_coloring(const EdgeColoredHypergraph& h,
                           std::optional<std::uint64_t> order_seed) {
  const auto inc = build_incidence(h);
  const auto order = visit_order(h.num_nodes(), order_seed);
  MatchResult out;
  out.deletions = DeletionSet(h.num_edges());
  cursor_walk(h, inc, order, out.deletions, out.ops, [&](EdgeId ef, EdgeId eb) -> unsigned {
    ++out.pairs;
    out.matching_bound += std::min(h.weight(ef), h.weight(eb));
    return 3u;
  });
  out.coloring = coloring_from_deletions(h, out.deletions);
  out.guarantee_applies = h.uniform_weights();
  return out;
}

HybridResult hybrid(const EdgeColoredHypergraph& h, std::optional<std::uint64_t> order_seed) {
  const auto match = match_coloring(h, order_seed);
  std::vector<std::uint8_t> covered(h.num_nodes(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (!match.deletions.contains(e))
      for (NodeId v : h.members(e)) covered[v] = 1;
  const auto mv = majority_vote(h);
  NodeColoring y = match.coloring;
  for (NodeId v = 0; v < h.num_nodes(); ++v)
    if (!covered[v]) y[v] = mv[v];
  // A deleted edge whose nodes are all uncovered is satisfied by the default
  // color of MatchColoring when that color is 1; majority vote can break it.
  if (objective_cost(h, y).total_cost > objective_cost(h, match.coloring).total_cost)
    return {match.coloring, true};
  return {std::move(y), false};
}

double a_posteriori_ratio(double cost, const LowerBoundBundle& bounds) {
  if (cost == 0.0) return 1.0;
  double best = 0.0;
  for (const auto& b : {bounds.lp_bound, bounds.matching_bound, bounds.mv_bound})
    if (b) best = std::max(best, *b);
  if (best <= 0.0) return std::numeric_limits<double>::infinity();
  return cost / best;
}

}  // namespace ecc
