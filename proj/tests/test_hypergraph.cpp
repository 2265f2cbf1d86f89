#include <doctest.h>

#include <algorithm>
#include <random>

#include "ecc/hypergraph.hpp"
#include "ecc/instance_io.hpp"
#include "ecc/random.hpp"
#include "support.hpp"

using namespace ecc;

TEST_CASE("validate reports range problems") {
  CHECK(validate(EdgeColoredHypergraph(2, 1, {{{0, 1}, 1, 1.0}})).empty());
  CHECK(validate(EdgeColoredHypergraph(2, 1, {{{0, 2}, 1, 1.0}})).size() == 1);
  CHECK(validate(EdgeColoredHypergraph(2, 1, {{{0, 1}, 0, 1.0}})).size() == 1);
  CHECK(validate(EdgeColoredHypergraph(2, 1, {{{0, 1}, 1, -1.0}})).size() == 1);
}

TEST_CASE("construction sorts, deduplicates, and rejects empty edges") {
  EdgeColoredHypergraph h(4, 2, {{{3, 1, 3, 1}, 2, 1.0}, {{0}, 1, 2.0}});
  const auto m = h.members(0);
  CHECK(std::vector<NodeId>(m.begin(), m.end()) == std::vector<NodeId>{1, 3});
  CHECK(h.rank() == 2);
  CHECK(h.total_pins() == 3);
  CHECK_THROWS_AS(EdgeColoredHypergraph(2, 1, {{{}, 1, 1.0}}), std::invalid_argument);
}

TEST_CASE("objective cost on small cases") {
  EdgeColoredHypergraph one(2, 2, {{{0, 1}, 2, 1.0}});
  const auto r = objective_cost(one, NodeColoring(std::vector<Color>{2, 2}));
  CHECK(r.total_cost == 0.0);
  CHECK(r.edge_satisfaction == 1.0);

  const auto gap = gen_integrality_gap(3);
  const auto all_one = objective_cost(gap, NodeColoring(3, 1));
  CHECK(all_one.total_cost == 2.0);
  CHECK(all_one.mistake_edges == std::vector<EdgeId>{1, 2});

  CHECK_THROWS_AS(objective_cost(gap, NodeColoring(2, 1)), std::invalid_argument);
}

TEST_CASE("objective cost matches an independent recount") {
  Rng rng(11);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = testing::small_random(seed, 8, 14, 3, 4, 0.5);
    std::uniform_int_distribution<Color> pick(1, 3);
    std::vector<Color> y(8);
    for (auto& c : y) c = pick(rng);
    const auto report = objective_cost(inst.hypergraph, NodeColoring(y));
    CHECK(report.total_cost == doctest::Approx(testing::naive_cost(inst.hypergraph, y)));
    CHECK(report.edge_satisfaction ==
          doctest::Approx(1.0 - double(report.mistake_edges.size()) / inst.hypergraph.num_edges()));
    CHECK(report.total_cost <= inst.hypergraph.total_weight());
  }
}

TEST_CASE("objective cost is invariant under edge permutation") {
  const auto inst = testing::small_random(3, 8, 12, 3, 3, 0.5);
  auto specs = inst.hypergraph.edge_specs();
  std::reverse(specs.begin(), specs.end());
  const EdgeColoredHypergraph reversed(8, 3, specs);
  const NodeColoring y(std::vector<Color>{1, 2, 3, 1, 2, 3, 1, 2});
  CHECK(objective_cost(reversed, y).total_cost == objective_cost(inst.hypergraph, y).total_cost);
}

TEST_CASE("accuracy") {
  const NodeColoring truth(std::vector<Color>{1, 1, 1});
  CHECK(accuracy(truth, truth) == 1.0);
  CHECK(accuracy(NodeColoring(std::vector<Color>{2, 2, 2}), truth) == 0.0);
  CHECK(accuracy(NodeColoring(std::vector<Color>{1, 2, 1}), truth) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(accuracy(NodeColoring(2, 1), truth), std::invalid_argument);
}

TEST_CASE("color-sorted incidence") {
  std::vector<EdgeSpec> edges(6, {{1, 2}, 2, 1.0});
  edges[2] = {{0, 1}, 3, 1.0};
  edges[5] = {{0, 3}, 1, 1.0};
  const EdgeColoredHypergraph h(5, 3, edges);
  const auto inc = build_incidence(h);
  const auto l0 = inc.edges_of(0);
  CHECK(std::vector<EdgeId>(l0.begin(), l0.end()) == std::vector<EdgeId>{5, 2});
  CHECK(inc.degree(4) == 0);

  const auto gap = gen_integrality_gap(3);
  const auto gi = build_incidence(gap);
  for (NodeId v = 0; v < 3; ++v) CHECK(gi.degree(v) == 2);

  // Flattened lists are a permutation of the incidence multiset and each list
  // is color-sorted.
  const auto inst = testing::small_random(5, 10, 20, 4, 4, 0.5);
  const auto ri = build_incidence(inst.hypergraph);
  CHECK(ri.flat().size() == inst.hypergraph.total_pins());
  std::vector<std::pair<NodeId, EdgeId>> a, b;
  for (EdgeId e = 0; e < inst.hypergraph.num_edges(); ++e)
    for (NodeId v : inst.hypergraph.members(e)) a.emplace_back(v, e);
  for (NodeId v = 0; v < 10; ++v) {
    const auto l = ri.edges_of(v);
    for (std::size_t i = 0; i < l.size(); ++i) {
      b.emplace_back(v, l[i]);
      if (i) CHECK(inst.hypergraph.color(l[i - 1]) <= inst.hypergraph.color(l[i]));
    }
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}
