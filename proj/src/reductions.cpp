#include "ecc/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "ecc/errors.hpp"

namespace ecc {

std::size_t WeightedGraph::max_degree() const {
  std::vector<std::size_t> deg(num_nodes, 0);
  for (auto [u, v] : edges) ++deg[u], ++deg[v];
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::string> validate(const WeightedGraph& g) {
  std::vector<std::string> out;
  if (g.weights.size() != g.num_nodes || g.undeletable.size() != g.num_nodes)
    out.push_back("weight/flag arrays do not match node count");
  for (std::size_t i = 0; i < g.weights.size(); ++i)
    if (!(g.weights[i] >= 0.0)) out.push_back("node " + std::to_string(i) + " has negative weight");
  for (auto [u, v] : g.edges) {
    if (u >= g.num_nodes || v >= g.num_nodes)
      out.push_back("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    else if (u == v)
      out.push_back("self-loop at " + std::to_string(u));
  }
  std::set<std::size_t> seen;
  for (const auto& t : g.terminals)
    if (!seen.insert(t.node).second) out.push_back("terminal " + std::to_string(t.node) + " repeated");
  return out;
}

namespace {

std::string num(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

template <typename T>
T parse_token(std::string_view tok, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("bad token '" + std::string(tok) + "'", line);
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while ((pos = line.find_first_not_of(" \t\r", pos)) != std::string_view::npos) {
    std::size_t end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

}  // namespace

std::string write_graph(const WeightedGraph& g) {
  std::string out = "vc " + std::to_string(g.num_nodes) + " " + std::to_string(g.edges.size()) + "\n";
  for (std::size_t i = 0; i < g.num_nodes; ++i)
    out += "w " + std::to_string(i) + " " + (g.undeletable[i] ? std::string("inf") : num(g.weights[i])) +
           "\n";
  for (auto [u, v] : g.edges) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  for (const auto& t : g.terminals)
    out += "t " + std::to_string(t.node) + " " + std::to_string(t.color) + "\n";
  return out;
}

WeightedGraph parse_graph(std::string_view text) {
  WeightedGraph g;
  bool have_header = false;
  std::size_t declared_edges = 0;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto t = split(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (t.empty() || t[0].front() == '#') continue;
    auto need = [&](std::size_t n) {
      if (t.size() != n) throw ParseError("expected " + std::to_string(n) + " tokens", number);
    };
    auto node = [&](std::string_view tok) {
      const auto i = parse_token<std::size_t>(tok, number);
      if (i >= g.num_nodes) throw ParseError("node " + std::to_string(i) + " out of range", number);
      return i;
    };
    if (!have_header) {
      if (t[0] != "vc") throw ParseError("missing header 'vc <n> <m>'", number);
      need(3);
      g = WeightedGraph(parse_token<std::size_t>(t[1], number));
      declared_edges = parse_token<std::size_t>(t[2], number);
      have_header = true;
    } else if (t[0] == "w") {
      need(3);
      const auto i = node(t[1]);
      if (t[2] == "inf") {
        g.undeletable[i] = 1;
        g.weights[i] = 0.0;
      } else {
        g.weights[i] = parse_token<double>(t[2], number);
        if (!(g.weights[i] >= 0.0) || !std::isfinite(g.weights[i]))
          throw ParseError("weight must be finite and nonnegative", number);
      }
    } else if (t[0] == "e") {
      need(3);
      const auto u = node(t[1]);
      const auto v = node(t[2]);
      if (u == v) throw ParseError("self-loop", number);
      g.add_edge(u, v);
    } else if (t[0] == "t") {
      need(3);
      g.terminals.push_back({node(t[1]), parse_token<Color>(t[2], number)});
    } else {
      throw ParseError("unknown record '" + std::string(t[0]) + "'", number);
    }
  }
  if (!have_header) throw ParseError("missing header 'vc <n> <m>'", 1);
  if (g.edges.size() != declared_edges)
    throw ParseError("header declares " + std::to_string(declared_edges) + " edges but " +
                     std::to_string(g.edges.size()) + " follow");
  return g;
}

namespace {

// Visits every bad pair (e < f) once via the per-node incidence lists.
template <typename Fn>
void for_each_bad_pair(const EdgeColoredHypergraph& h, Fn&& fn) {
  const auto inc = build_incidence(h);
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    const auto list = inc.edges_of(v);
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b)
        if (h.color(list[a]) != h.color(list[b]))
          pairs.emplace_back(std::min(list[a], list[b]), std::max(list[a], list[b]));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto [e, f] : pairs) fn(e, f);
}

}  // namespace

WeightedGraph ecc_to_vertex_cover(const EdgeColoredHypergraph& h) {
  WeightedGraph g(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) g.weights[e] = h.weight(e);
  for_each_bad_pair(h, [&](EdgeId e, EdgeId f) { g.add_edge(e, f); });
  return g;
}

std::size_t count_bad_pairs(const EdgeColoredHypergraph& h) {
  std::size_t n = 0;
  for_each_bad_pair(h, [&](EdgeId, EdgeId) { ++n; });
  return n;
}

VertexCoverEcc vertex_cover_to_ecc(const WeightedGraph& g) {
  if (const auto problems = validate(g); !problems.empty())
    throw std::invalid_argument(problems.front());
  std::vector<std::vector<NodeId>> members(g.num_nodes);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    members[g.edges[i].first].push_back(static_cast<NodeId>(i));
    members[g.edges[i].second].push_back(static_cast<NodeId>(i));
  }
  VertexCoverEcc out;
  out.hyperedge_of.assign(g.num_nodes, std::nullopt);
  std::vector<EdgeSpec> specs;
  for (std::size_t u = 0; u < g.num_nodes; ++u) {
    if (members[u].empty()) continue;
    out.hyperedge_of[u] = static_cast<EdgeId>(specs.size());
    out.graph_node_of.push_back(u);
    specs.push_back({std::move(members[u]), static_cast<Color>(u + 1), g.weights[u]});
  }
  out.hypergraph =
      EdgeColoredHypergraph(g.edges.size(), static_cast<Color>(g.num_nodes), std::move(specs));
  return out;
}

WeightedGraph ecc_to_node_mc(const EdgeColoredHypergraph& h) {
  const std::size_t n = h.num_nodes();
  const std::size_t m = h.num_edges();
  WeightedGraph g(n + m + h.num_colors());
  for (std::size_t v = 0; v < n; ++v) g.undeletable[v] = 1, g.weights[v] = 0.0;
  for (Color i = 1; i <= h.num_colors(); ++i) {
    const std::size_t t = n + m + i - 1;
    g.undeletable[t] = 1;
    g.weights[t] = 0.0;
    g.terminals.push_back({t, i});
  }
  for (EdgeId e = 0; e < m; ++e) {
    const std::size_t ve = n + e;
    g.weights[ve] = h.weight(e);
    for (NodeId v : h.members(e)) g.add_edge(v, ve);
    g.add_edge(n + m + h.color(e) - 1, ve);
  }
  return g;
}

HyperMcInstance ecc_to_hyper_mc(const EdgeColoredHypergraph& h) {
  HyperMcInstance out;
  out.num_nodes = h.num_nodes() + h.num_colors();
  for (Color i = 1; i <= h.num_colors(); ++i)
    out.terminals.push_back(static_cast<NodeId>(h.num_nodes() + i - 1));
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto members = std::vector<NodeId>(h.members(e).begin(), h.members(e).end());
    members.push_back(out.terminals[h.color(e) - 1]);
    out.edges.push_back(std::move(members));
    out.weights.push_back(h.weight(e));
  }
  return out;
}

DeletionSet cover_to_deletions(const EdgeColoredHypergraph& h,
                               const std::vector<std::size_t>& cover) {
  DeletionSet d(h.num_edges());
  for (std::size_t e : cover) {
    if (e >= h.num_edges()) throw VerificationFailure("cover node out of range");
    d.insert(static_cast<EdgeId>(e), h.weight(static_cast<EdgeId>(e)));
  }
  if (const auto bad = find_bad_pair(h, d))
    throw VerificationFailure("not a vertex cover: graph edge (" + std::to_string(bad->first) +
                              ", " + std::to_string(bad->second) + ") uncovered");
  return d;
}

std::vector<std::size_t> deletions_to_cover(const EdgeColoredHypergraph& h,
                                            const DeletionSet& deleted) {
  if (const auto bad = find_bad_pair(h, deleted))
    throw VerificationFailure("deletion set leaves bad pair (" + std::to_string(bad->first) +
                              ", " + std::to_string(bad->second) + ")");
  const auto edges = deleted.edges();
  return {edges.begin(), edges.end()};
}

}  // namespace ecc
