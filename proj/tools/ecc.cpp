// Command-line front end: instance generation, solving, scaling runs, LP
// comparison, certificate and invariant verification, reductions, export.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecc/certificates.hpp"
#include "ecc/ecc_lp.hpp"
#include "ecc/errors.hpp"
#include "ecc/experiment.hpp"
#include "ecc/instance_io.hpp"
#include "ecc/oracle.hpp"
#include "ecc/reductions.hpp"
#include "ecc/rounding.hpp"

namespace {

using namespace ecc;

constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitCapacity = 4;

struct InstanceArgs {
  std::string path;
  std::string bench_edges;
  std::string bench_labels;
  std::string bench_node_labels;
  std::string truth;

  void add(CLI::App* cmd, bool positional_required = false) {
    auto* p = cmd->add_option("instance", path, "Instance in canonical text format");
    if (positional_required) p->required();
    cmd->add_option("--edges-file", bench_edges, "Benchmark edges file (1-based ids per line)");
    cmd->add_option("--labels-file", bench_labels, "Benchmark edge labels file");
    cmd->add_option("--node-labels", bench_node_labels, "Benchmark ground-truth node labels");
    cmd->add_option("--truth", truth, "Ground-truth coloring, one color per line");
  }

  std::string name() const {
    const auto& p = path.empty() ? bench_edges : path;
    return std::filesystem::path(p).stem().string();
  }

  BenchmarkInstance load() const {
    BenchmarkInstance out;
    if (!path.empty()) {
      out.hypergraph = parse_canonical(read_file(path));
    } else if (!bench_edges.empty() && !bench_labels.empty()) {
      const auto edges = read_file(bench_edges);
      const auto labels = read_file(bench_labels);
      std::optional<std::string> nodes;
      if (!bench_node_labels.empty()) nodes = read_file(bench_node_labels);
      out = parse_benchmark(edges, labels,
                            nodes ? std::optional<std::string_view>(*nodes) : std::nullopt);
    } else {
      throw CLI::ValidationError("give an instance path or --edges-file with --labels-file");
    }
    if (!truth.empty()) out.truth = parse_coloring(read_file(truth));
    if (const auto problems = validate(out.hypergraph); !problems.empty())
      throw ParseError("invalid instance: " + problems.front());
    return out;
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_file(out_path, text);
}

Interval parse_interval(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--interval expects lo:hi");
  Interval i{std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
  if (!(0.0 <= i.lo && i.lo < i.hi && i.hi <= 1.0))
    throw CLI::ValidationError("--interval needs 0 <= lo < hi <= 1");
  return i;
}

std::vector<double> read_lp_solution(const std::string& path, const EdgeColoredHypergraph& h) {
  return lp::primal_from_named(build_ecc_lp(h), lp::parse_solution_text(read_file(path)));
}

int run_verify_certs(const std::string& emit_dir) {
  const auto report = cert::verify_all();
  for (const auto& c : report.cases) {
    std::cout << c.id << " bound=" << cert::to_string(c.bound) << (c.ok ? " OK" : " FAIL") << "\n";
    for (const auto& f : c.failures) std::cout << "  " << f << "\n";
  }
  if (!report.checksum_ok) std::cout << "certificate table checksum mismatch\n";
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (const auto& c : cert::embedded_certificates()) {
      const auto lp = c.family == cert::Family::A ? cert::build_lp_a(c.q) : cert::build_lp_b(c.p, c.q);
      std::string file = lp.id();
      for (char& ch : file)
        if (ch == ' ' || ch == '=') ch = '_';
      write_file(emit_dir + "/" + file + ".lp", lp::export_lp_text(cert::to_linear_program(lp)));
    }
  }
  if (!report.ok()) {
    std::cout << report.passed() << "/" << cert::embedded_certificates().size()
              << " certificates verified"
              << (report.failed_case ? ", first failure: " + *report.failed_case : "") << "\n";
    return kExitVerify;
  }
  std::cout << report.passed() << "/" << report.cases.size()
            << " certificates verified, max bound " << cert::to_string(report.max_bound) << "\n";
  return 0;
}

int run_verify_invariants(const InstanceArgs& inst, const std::string& solution, bool halve_edges) {
  const auto h = inst.load().hypergraph;
  EccLpSolution x = solution.empty() ? solve_ecc_lp(h) : extract_ecc_solution(h, read_lp_solution(solution, h));
  if (halve_edges)
    for (double& xe : x.x_edge) xe /= 2.0;
  const auto problems = check_threshold_invariants(h, x);
  std::cout << "LP value " << x.value << ", " << h.num_edges() << " edges checked\n";
  for (const auto& p : problems) std::cout << "violation: " << p << "\n";
  if (!problems.empty()) return kExitVerify;
  std::cout << "threshold invariants hold on every edge\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-colored clustering: algorithms, bounds, and verification"};
  app.require_subcommand(1);
  int exit_code = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string gen_type = "random", gen_out, gen_truth_out;
  RandomInstanceParams params;
  unsigned gen_k = 3;
  gen->add_option("--type", gen_type, "gap | star | random")
      ->check(CLI::IsMember({"gap", "star", "random"}));
  gen->add_option("-k,--colors", gen_k, "Number of colors (gap and random)");
  gen->add_option("--nodes", params.num_nodes, "Random: node count");
  gen->add_option("--edges", params.num_edges, "Random: edge count");
  gen->add_option("--max-size", params.max_edge_size, "Random: maximum edge size");
  gen->add_option("--noise", params.noise, "Random: probability of resampling an edge color");
  gen->add_option("--seed", params.seed, "Random: seed");
  gen->add_option("-o,--out", gen_out, "Output path (default stdout)");
  gen->add_option("--truth-out", gen_truth_out, "Random: write the planted coloring here");
  gen->callback([&] {
    if (gen_type == "gap") {
      emit(write_canonical(gen_integrality_gap(gen_k)), gen_out);
    } else if (gen_type == "star") {
      emit(write_canonical(gen_star()), gen_out);
    } else {
      params.num_colors = gen_k;
      const auto planted = gen_random(params);
      emit(write_canonical(planted.hypergraph), gen_out);
      if (!gen_truth_out.empty()) write_file(gen_truth_out, write_coloring(planted.truth));
    }
  });

  // solve
  auto* solve = app.add_subcommand("solve", "Run an algorithm and report metrics");
  InstanceArgs solve_inst;
  solve_inst.add(solve);
  std::string algo_name = "mv", interval_text, format = "csv", lp_solution, dataset, coloring_out;
  SolveConfig config;
  solve->add_option("--algo", algo_name, "mv | pitt | match | hybrid | lp | lp-simple | exact")
      ->check(CLI::IsMember({"mv", "pitt", "match", "hybrid", "lp", "lp-simple", "exact"}));
  solve->add_option("--seed", config.seed, "Seed of the first run");
  solve->add_option("--runs", config.runs, "Best of N runs")->check(CLI::PositiveNumber);
  solve->add_option("--interval", interval_text, "Rounding interval lo:hi for --algo lp");
  solve->add_option("--format", format, "csv | json | text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  solve->add_flag("--with-lp-bound", config.with_lp_bound, "Also compute the LP lower bound");
  solve->add_option("--lp-solution", lp_solution,
                    "External ECC LP solution ('name value' lines) instead of the built-in solver");
  solve->add_option("--dataset", dataset, "Dataset name in the report");
  solve->add_option("--coloring-out", coloring_out, "Write the coloring here");
  solve->callback([&] {
    const auto inst = solve_inst.load();
    config.algo = *parse_algorithm(algo_name);
    if (!interval_text.empty()) config.interval = parse_interval(interval_text);
    if (!lp_solution.empty()) config.lp_primal = read_lp_solution(lp_solution, inst.hypergraph);
    config.oracle_cap = oracle_cap_from_env();
    const auto rec = run_algorithm(dataset.empty() ? solve_inst.name() : dataset,
                                   inst.hypergraph, inst.truth, config);
    if (format == "csv")
      std::cout << kCsvHeader << "\n" << to_csv(rec) << "\n";
    else if (format == "json")
      std::cout << to_json({rec}) << "\n";
    else
      std::cout << to_text(rec);
    if (!coloring_out.empty()) write_file(coloring_out, write_coloring(rec.coloring));
  });

  // bench-scaling
  auto* scaling = app.add_subcommand("bench-scaling", "Time an algorithm on doubling sizes");
  std::string scaling_algo = "pitt";
  std::vector<std::size_t> sizes{100000, 200000, 400000, 800000, 1600000};
  std::uint64_t scaling_seed = 1;
  std::size_t repeats = 5;
  scaling->add_option("--algo", scaling_algo, "mv | pitt | match | hybrid")
      ->check(CLI::IsMember({"mv", "pitt", "match", "hybrid"}));
  scaling->add_option("--sizes", sizes, "Target total incidences per instance")->delimiter(',');
  scaling->add_option("--seed", scaling_seed, "Generator seed");
  scaling->add_option("--repeats", repeats, "Keep the fastest of this many runs");
  scaling->callback([&] {
    const auto report = bench_scaling(*parse_algorithm(scaling_algo), sizes, scaling_seed, repeats);
    std::cout << "pins,seconds\n";
    for (const auto& row : report.rows) std::cout << row.pins << "," << row.seconds << "\n";
    std::cout << "# log-log slope " << report.slope << "\n";
  });

  // compare-lp
  auto* compare = app.add_subcommand("compare-lp", "ECC LP versus Node-MC LP values");
  InstanceArgs compare_inst;
  compare_inst.add(compare);
  compare->callback([&] {
    const auto h = compare_inst.load().hypergraph;
    const auto c = compare_lp(h);
    std::cout << "ecc_lp,nodemc_lp,gap\n" << c.ecc << "," << c.nodemc << "," << c.gap << "\n";
    if (c.nodemc > c.ecc + 1e-6) {
      std::cerr << "Node-MC LP exceeds ECC LP\n";
      exit_code = kExitVerify;
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check certificates or LP invariants");
  bool certs = false, halve = false;
  std::string emit_dir, verify_solution;
  InstanceArgs verify_inst;
  verify->add_flag("--certs", certs, "Verify the embedded dual certificates exactly");
  verify->add_option("--emit-lp", emit_dir, "With --certs: write each auxiliary LP to this directory");
  auto* inv = verify->add_option("--invariants", verify_inst.path,
                                 "Instance whose LP optimum gets the threshold checks");
  verify->add_option("--lp-solution", verify_solution, "Use this LP solution instead of solving");
  verify->add_flag("--halve-edges", halve, "Halve every x_e first (to exercise failure reporting)");
  verify->callback([&] {
    if (certs)
      exit_code = run_verify_certs(emit_dir);
    else if (inv->count())
      exit_code = run_verify_invariants(verify_inst, verify_solution, halve);
    else
      throw CLI::ValidationError("verify needs --certs or --invariants <instance>");
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build a reduced instance");
  InstanceArgs reduce_inst;
  reduce_inst.add(reduce);
  std::string target = "vc", graph_in, reduce_out;
  reduce->add_option("--to", target, "vc | nodemc | hypermc")
      ->check(CLI::IsMember({"vc", "nodemc", "hypermc"}));
  reduce->add_option("--from-graph", graph_in, "Vertex cover graph to turn into an ECC instance");
  reduce->add_option("-o,--out", reduce_out, "Output path (default stdout)");
  reduce->callback([&] {
    if (!graph_in.empty()) {
      emit(write_canonical(vertex_cover_to_ecc(parse_graph(read_file(graph_in))).hypergraph),
           reduce_out);
      return;
    }
    const auto h = reduce_inst.load().hypergraph;
    if (target == "vc") {
      emit(write_graph(ecc_to_vertex_cover(h)), reduce_out);
    } else if (target == "nodemc") {
      emit(write_graph(ecc_to_node_mc(h)), reduce_out);
    } else {
      const auto mc = ecc_to_hyper_mc(h);
      std::ostringstream out;
      out << "hypermc " << mc.num_nodes << " " << mc.edges.size() << "\n";
      for (std::size_t i = 0; i < mc.terminals.size(); ++i)
        out << "t " << mc.terminals[i] << " " << i + 1 << "\n";
      for (std::size_t e = 0; e < mc.edges.size(); ++e) {
        out << mc.weights[e];
        for (auto v : mc.edges[e]) out << " " << v;
        out << "\n";
      }
      emit(out.str(), reduce_out);
    }
  });

  // export
  auto* exp = app.add_subcommand("export", "Write an LP in LP-file format");
  InstanceArgs export_inst;
  export_inst.add(exp);
  std::string which = "ecc", export_out;
  exp->add_option("--lp", which, "ecc | nodemc")->check(CLI::IsMember({"ecc", "nodemc"}));
  exp->add_option("-o,--out", export_out, "Output path (default stdout)");
  exp->callback([&] {
    const auto h = export_inst.load().hypergraph;
    emit(lp::export_lp_text(which == "ecc" ? build_ecc_lp(h) : build_nodemc_lp(h)), export_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerify;
  } catch (const CapacityExceeded& e) {
    std::cerr << "capacity exceeded: " << e.what()
              << "\nUse 'ecc export --lp ecc' with an external solver and pass --lp-solution.\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
