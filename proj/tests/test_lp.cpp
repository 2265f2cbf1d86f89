#include <doctest.h>

#include <cmath>

#include "ecc/ecc_lp.hpp"
#include "ecc/errors.hpp"
#include "ecc/instance_io.hpp"
#include "ecc/linear_program.hpp"
#include "ecc/oracle.hpp"
#include "support.hpp"

using namespace ecc;
using lp::Relation;

TEST_CASE("simplex on textbook problems") {
  lp::LinearProgram a;
  const auto x = a.add_variable("x", 0, 10, 1);
  a.add_constraint({{x, 1}}, Relation::greater_equal, 2);
  const auto ra = lp::solve(a);
  CHECK(ra.status == lp::Status::optimal);
  CHECK(ra.value == doctest::Approx(2.0));

  lp::LinearProgram b(lp::Sense::maximize);
  b.add_variable("x", 0, lp::kInfinity, 1);
  CHECK(lp::solve(b).status == lp::Status::unbounded);

  lp::LinearProgram c;
  const auto y = c.add_variable("y", 0, 1, 1);
  c.add_constraint({{y, 1}}, Relation::greater_equal, 2);
  CHECK(lp::solve(c).status == lp::Status::infeasible);

  // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3: optimum (3, 1) -> 11.
  lp::LinearProgram d(lp::Sense::maximize);
  const auto dx = d.add_variable("x", 0, 3, 3);
  const auto dy = d.add_variable("y", 0, lp::kInfinity, 2);
  d.add_constraint({{dx, 1}, {dy, 1}}, Relation::less_equal, 4);
  d.add_constraint({{dx, 1}, {dy, 3}}, Relation::less_equal, 6);
  const auto rd = lp::solve(d);
  CHECK(rd.value == doctest::Approx(11.0));
  CHECK(rd.primal[0] == doctest::Approx(3.0));
  CHECK(rd.primal[1] == doctest::Approx(1.0));

  // Free and upper-bounded-only variables: min x - y, x free, y <= 2, x + y = 1.
  lp::LinearProgram e;
  const auto ex = e.add_variable("x", -lp::kInfinity, lp::kInfinity, 1);
  const auto ey = e.add_variable("y", -lp::kInfinity, 2, -1);
  e.add_constraint({{ex, 1}, {ey, 1}}, Relation::equal, 1);
  e.add_constraint({{ex, 1}}, Relation::greater_equal, -5);
  const auto re = lp::solve(e);
  CHECK(re.value == doctest::Approx(-3.0));
  CHECK(e.max_violation(re.primal) < 1e-9);

  // Redundant equality rows.
  lp::LinearProgram f;
  const auto fx = f.add_variable("x", 0, lp::kInfinity, 1);
  const auto fy = f.add_variable("y", 0, lp::kInfinity, 1);
  f.add_constraint({{fx, 1}, {fy, 1}}, Relation::equal, 2);
  f.add_constraint({{fx, 2}, {fy, 2}}, Relation::equal, 4);
  CHECK(lp::solve(f).value == doctest::Approx(2.0));
}

TEST_CASE("iteration limit is reported") {
  const auto program = build_ecc_lp(gen_integrality_gap(5));
  lp::SolveOptions options;
  options.iteration_limit = 1;
  CHECK(lp::solve(program, options).status == lp::Status::iteration_limit);
}

TEST_CASE("serial and parallel elimination give the same result") {
  const auto inst = testing::small_random(4, 12, 20, 4, 3, 0.4);
  const auto program = build_nodemc_lp(inst.hypergraph);
  lp::SolveOptions serial;
  serial.parallel = false;
  const auto a = lp::solve(program, serial);
  const auto b = lp::solve(program);
  CHECK(a.value == b.value);
  CHECK(a.primal == b.primal);
}

TEST_CASE("ECC LP values") {
  const EdgeColoredHypergraph single(2, 1, {{{0, 1}, 1, 1.0}});
  CHECK(solve_ecc_lp(single).value == doctest::Approx(0.0));

  const auto gap3 = solve_ecc_lp(gen_integrality_gap(3));
  CHECK(gap3.value == doctest::Approx(1.5).epsilon(1e-9));
  for (double xe : gap3.x_edge) CHECK(xe == doctest::Approx(0.5));
  const auto g3 = gen_integrality_gap(3);
  for (EdgeId e = 0; e < 3; ++e)
    for (NodeId v : g3.members(e)) CHECK(gap3.node(v, g3.color(e)) == doctest::Approx(0.5));

  CHECK(solve_ecc_lp(gen_integrality_gap(4)).value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(solve_ecc_lp(gen_star()).value == doctest::Approx(2.0));
}

TEST_CASE("Node-MC LP values") {
  CHECK(solve_value(build_nodemc_lp(gen_star())) == doctest::Approx(1.5));
  const EdgeColoredHypergraph single(2, 1, {{{0, 1}, 1, 1.0}});
  CHECK(solve_value(build_nodemc_lp(single)) == doctest::Approx(0.0));
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto inst = testing::small_random(seed, 10, 16, 4, 3, 0.5);
    const double ecc = solve_ecc_lp(inst.hypergraph).value;
    const double nodemc = solve_value(build_nodemc_lp(inst.hypergraph));
    CHECK(nodemc <= ecc + 1e-6);
  }
}

TEST_CASE("ECC LP lower-bounds the exact optimum") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto inst = testing::small_random(seed, 7, 10, 3, 3, 0.5);
    const double lpv = solve_ecc_lp(inst.hypergraph).value;
    CHECK(lpv <= testing::enumerate_opt(inst.hypergraph) + 1e-9);
  }
}

TEST_CASE("k = 2 basic optima are integral") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = testing::small_random(seed, 12, 24, 2, 4, 0.4);
    const auto x = solve_ecc_lp(inst.hypergraph);
    for (double v : x.x_node) CHECK((v == 0.0 || v == 1.0));
    CHECK(x.value == doctest::Approx(testing::enumerate_opt(inst.hypergraph)));
  }
}

TEST_CASE("extracted solutions satisfy the constraints") {
  const auto inst = testing::small_random(9, 10, 18, 4, 3, 0.5);
  const auto program = build_ecc_lp(inst.hypergraph);
  const auto result = lp::solve(program);
  const auto x = extract_ecc_solution(inst.hypergraph, result);
  CHECK(check_ecc_solution(inst.hypergraph, x).empty());
  std::vector<double> primal = x.x_node;
  primal.insert(primal.end(), x.x_edge.begin(), x.x_edge.end());
  CHECK(program.max_violation(primal) <= 1e-6);
  CHECK(x.value == doctest::Approx(result.value));

  lp::LpResult bad;
  bad.status = lp::Status::infeasible;
  CHECK_THROWS_AS(extract_ecc_solution(inst.hypergraph, bad), std::invalid_argument);
  // A noise-free instance has LP value 0 and the truth at distance 0.
  const auto clean = testing::small_random(2, 10, 18, 3, 3, 0.0);
  const auto xc = solve_ecc_lp(clean.hypergraph);
  CHECK(xc.value == doctest::Approx(0.0));
  for (EdgeId e = 0; e < clean.hypergraph.num_edges(); ++e)
    for (NodeId v : clean.hypergraph.members(e)) CHECK(xc.node(v, clean.truth[v]) == 0.0);
}

TEST_CASE("LP text export and named solution import") {
  lp::LinearProgram one;
  one.add_variable("x", 0, 1, 1);
  const auto text = lp::export_lp_text(one);
  for (const char* section : {"Minimize", "Subject To", "Bounds", "End"})
    CHECK(text.find(section) != std::string::npos);

  const EdgeColoredHypergraph edge(3, 2, {{{0, 1, 2}, 1, 1.0}});
  const auto ecc_text = lp::export_lp_text(build_ecc_lp(edge));
  std::size_t cov = 0;
  for (std::size_t pos = 0; (pos = ecc_text.find(" cov_", pos)) != std::string::npos; ++pos) ++cov;
  CHECK(cov == 3);
  CHECK(ecc_text.find("xn_2_2") != std::string::npos);
  CHECK(ecc_text.find("xe_0") != std::string::npos);

  const auto values = lp::parse_solution_text("# sol\nxe_0 0.5\nxn_0_1 1\n");
  CHECK(values.at("xe_0") == 0.5);
  const auto primal = lp::primal_from_named(build_ecc_lp(edge), values);
  CHECK(primal[0] == 1.0);
  CHECK(primal.back() == 0.5);
  CHECK_THROWS_AS(lp::parse_solution_text("xe_0\n"), ParseError);
}

TEST_CASE("reference solver capacity") {
  RandomInstanceParams p;
  p.num_nodes = 2000;
  p.num_edges = 10;
  p.num_colors = 3;
  const auto big = gen_random(p).hypergraph;
  CHECK_THROWS_AS(solve_ecc_lp(big), CapacityExceeded);
}
