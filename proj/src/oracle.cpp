#include "ecc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "ecc/errors.hpp"

namespace ecc {

double oracle_cap_from_env() {
  if (const char* s = std::getenv("ECC_ORACLE_CAP")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && v > 0.0) return v;
  }
  return kDefaultOracleCap;
}

namespace {

// Assign nodes in order of decreasing degree. An edge becomes a mistake the
// moment any assigned member takes a different color, so the partial cost is
// a valid lower bound for every completion.
class EccSearch {
 public:
  EccSearch(const EdgeColoredHypergraph& h, std::vector<NodeId> order,
            std::vector<std::vector<Color>> choices, double incumbent, NodeColoring best)
      : h_(h),
        inc_(build_incidence(h)),
        order_(std::move(order)),
        choices_(std::move(choices)),
        broken_(h.num_edges(), 0),
        current_(best),
        best_(std::move(best)),
        best_cost_(incumbent) {}

  void run() { descend(0, 0.0); }
  double best_cost() const { return best_cost_; }
  const NodeColoring& best() const { return best_; }
  std::uint64_t explored() const { return explored_; }

 private:
  void descend(std::size_t depth, double cost) {
    ++explored_;
    if (cost >= best_cost_) return;
    if (depth == order_.size()) {
      best_cost_ = cost;
      best_ = current_;
      return;
    }
    const NodeId v = order_[depth];
    for (Color c : choices_[depth]) {
      current_[v] = c;
      double added = 0.0;
      newly_.clear();
      for (EdgeId e : inc_.edges_of(v))
        if (!broken_[e] && h_.color(e) != c) {
          broken_[e] = 1;
          added += h_.weight(e);
          newly_.push_back(e);
        }
      const std::vector<EdgeId> undo = newly_;
      descend(depth + 1, cost + added);
      for (EdgeId e : undo) broken_[e] = 0;
    }
  }

  const EdgeColoredHypergraph& h_;
  ColorSortedIncidence inc_;
  std::vector<NodeId> order_;
  std::vector<std::vector<Color>> choices_;
  std::vector<std::uint8_t> broken_;
  std::vector<EdgeId> newly_;
  NodeColoring current_;
  NodeColoring best_;
  double best_cost_;
  std::uint64_t explored_ = 0;
};

}  // namespace

EccOracleResult bruteforce_ecc(const EdgeColoredHypergraph& h, double cap) {
  require_valid(h);
  const auto inc = build_incidence(h);
  std::vector<NodeId> order;
  double space = 1.0;
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    if (inc.degree(v) == 0) continue;
    order.push_back(v);
    std::size_t distinct = 0;
    Color last = 0;
    for (EdgeId e : inc.edges_of(v))
      if (h.color(e) != last) ++distinct, last = h.color(e);
    space *= static_cast<double>(distinct);
  }
  if (space > cap)
    throw CapacityExceeded("exact search space " + std::to_string(space) + " exceeds cap " +
                           std::to_string(cap));
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return inc.degree(a) > inc.degree(b); });
  // Colors tried in order of decreasing incident weight, so good solutions
  // come first and tighten the bound early.
  std::vector<std::vector<Color>> choices;
  for (NodeId v : order) {
    std::vector<std::pair<double, Color>> weight;
    for (EdgeId e : inc.edges_of(v)) {
      if (weight.empty() || weight.back().second != h.color(e)) weight.push_back({0.0, h.color(e)});
      weight.back().first += h.weight(e);
    }
    std::stable_sort(weight.begin(), weight.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Color> cs;
    for (auto [w, c] : weight) cs.push_back(c);
    choices.push_back(std::move(cs));
  }
  // Any coloring serves as the first incumbent; the all-choice-0 one is
  // usually good.
  NodeColoring start(h.num_nodes(), 1);
  for (std::size_t i = 0; i < order.size(); ++i) start[order[i]] = choices[i].front();
  const double start_cost = objective_cost(h, start).total_cost;
  EccSearch search(h, order, choices, std::nextafter(start_cost, std::numeric_limits<double>::infinity()), start);
  search.run();
  return {search.best_cost(), search.best(), search.explored()};
}

VcOracleResult bruteforce_vc(const WeightedGraph& g, double cap) {
  if (const auto problems = validate(g); !problems.empty())
    throw std::invalid_argument(problems.front());
  std::vector<std::vector<std::size_t>> adj(g.num_nodes);
  for (auto [u, v] : g.edges) adj[u].push_back(v), adj[v].push_back(u);
  std::vector<std::size_t> active;
  for (std::size_t u = 0; u < g.num_nodes; ++u)
    if (!adj[u].empty()) active.push_back(u);
  if (std::pow(2.0, static_cast<double>(active.size())) > cap)
    throw CapacityExceeded("2^" + std::to_string(active.size()) + " covers exceed cap " +
                           std::to_string(cap));
  std::stable_sort(active.begin(), active.end(),
                   [&](std::size_t a, std::size_t b) { return adj[a].size() > adj[b].size(); });
  auto weight = [&](std::size_t u) {
    return g.undeletable[u] ? std::numeric_limits<double>::infinity() : g.weights[u];
  };

  // state: 0 undecided, 1 in cover, 2 out (forces all neighbours in).
  std::vector<std::uint8_t> state(g.num_nodes, 0);
  VcOracleResult out;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::uint8_t> best_state;
  auto rec = [&](auto&& self, std::size_t depth, double cost) -> void {
    ++out.explored;
    if (cost >= best) return;
    while (depth < active.size() && state[active[depth]] != 0) ++depth;
    if (depth == active.size()) {
      best = cost;
      best_state = state;
      return;
    }
    const std::size_t u = active[depth];
    state[u] = 1;
    self(self, depth + 1, cost + weight(u));
    // Leaving u out requires every neighbour in the cover.
    std::vector<std::size_t> forced;
    bool ok = true;
    double extra = 0.0;
    for (std::size_t w : adj[u]) {
      if (state[w] == 2) ok = false;
      if (state[w] == 0) forced.push_back(w), extra += weight(w);
    }
    if (ok) {
      state[u] = 2;
      for (std::size_t w : forced) state[w] = 1;
      self(self, depth + 1, cost + extra);
      for (std::size_t w : forced) state[w] = 0;
    }
    state[u] = 0;
  };
  rec(rec, 0, 0.0);
  if (!std::isfinite(best)) throw std::runtime_error("no finite-weight vertex cover exists");
  out.value = best;
  for (std::size_t u = 0; u < g.num_nodes; ++u)
    if (best_state[u] == 1) out.cover.push_back(u);
  return out;
}

}  // namespace ecc
