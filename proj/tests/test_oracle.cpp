#include <doctest.h>

#include <cstdlib>

#include "ecc/errors.hpp"
#include "ecc/instance_io.hpp"
#include "ecc/oracle.hpp"
#include "support.hpp"

using namespace ecc;

TEST_CASE("exact ECC oracle") {
  const auto gap = bruteforce_ecc(gen_integrality_gap(3));
  CHECK(gap.value == 2.0);
  CHECK(objective_cost(gen_integrality_gap(3), gap.witness).total_cost == 2.0);
  CHECK(bruteforce_ecc(gen_star()).value == 2.0);
  const auto clean = testing::small_random(1, 20, 40, 3, 3, 0.0);
  CHECK(bruteforce_ecc(clean.hypergraph).value == 0.0);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = testing::small_random(seed, 7, 11, 3, 3, 0.6);
    const auto r = bruteforce_ecc(inst.hypergraph);
    CHECK(r.value == doctest::Approx(testing::enumerate_opt(inst.hypergraph)));
    CHECK(objective_cost(inst.hypergraph, r.witness).total_cost == doctest::Approx(r.value));
  }
}

TEST_CASE("exact ECC oracle refuses oversized searches") {
  const auto inst = testing::small_random(3, 30, 80, 4, 3, 0.9);
  CHECK_THROWS_AS(bruteforce_ecc(inst.hypergraph, 100), CapacityExceeded);
}

TEST_CASE("oracle cap from the environment") {
  setenv("ECC_ORACLE_CAP", "1234", 1);
  CHECK(oracle_cap_from_env() == 1234.0);
  unsetenv("ECC_ORACLE_CAP");
  CHECK(oracle_cap_from_env() == kDefaultOracleCap);
}

TEST_CASE("exact vertex cover oracle") {
  WeightedGraph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  CHECK(bruteforce_vc(triangle).value == 2.0);
  CHECK(bruteforce_vc(WeightedGraph(5)).value == 0.0);

  WeightedGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  p3.weights[1] = 10.0;
  const auto r = bruteforce_vc(p3);
  CHECK(r.value == 2.0);
  CHECK(r.cover == std::vector<std::size_t>{0, 2});

  WeightedGraph big(40);
  for (std::size_t u = 0; u + 1 < 40; ++u) big.add_edge(u, u + 1);
  CHECK_THROWS_AS(bruteforce_vc(big, 1e6), CapacityExceeded);
}
