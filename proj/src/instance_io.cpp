#include "ecc/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "ecc/errors.hpp"
#include "ecc/random.hpp"

namespace ecc {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

// Splits on LF, strips a trailing CR, drops blank lines and '#' comments.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(separators, pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(separators, pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("bad " + std::string(what) + " token '" + std::string(token) + "'", line);
  return value;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

EdgeColoredHypergraph parse_canonical(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing header 'ecc <nodes> <edges> <colors>'", 1);

  const auto header = tokens(lines[0].text, " \t");
  if (header.size() != 4 || header[0] != "ecc")
    throw ParseError("malformed header, expected 'ecc <nodes> <edges> <colors>'", lines[0].number);
  const auto n = parse_number<std::uint64_t>(header[1], lines[0].number, "node count");
  const auto m = parse_number<std::uint64_t>(header[2], lines[0].number, "edge count");
  const auto k = parse_number<std::uint32_t>(header[3], lines[0].number, "color count");

  if (lines.size() - 1 < m)
    throw ParseError("header declares " + std::to_string(m) + " edges but only " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  if (lines.size() - 1 > m)
    throw ParseError("more edge lines than the " + std::to_string(m) + " declared",
                     lines[m + 1].number);

  std::vector<EdgeSpec> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const auto t = tokens(line, " \t");
    if (t.size() < 3) throw ParseError("edge line needs '<color> <weight> <node>...'", number);
    EdgeSpec spec;
    spec.color = parse_number<std::uint32_t>(t[0], number, "color");
    spec.weight = parse_number<double>(t[1], number, "weight");
    if (spec.color < 1 || spec.color > k)
      throw ParseError("color " + std::to_string(spec.color) + " outside [1, " +
                           std::to_string(k) + "]",
                       number);
    if (!(spec.weight >= 0.0) || !std::isfinite(spec.weight))
      throw ParseError("weight must be finite and nonnegative", number);
    for (std::size_t j = 2; j < t.size(); ++j) {
      const auto id = parse_number<std::uint64_t>(t[j], number, "node id");
      if (id >= n)
        throw ParseError("node id " + std::to_string(id) + " outside [0, " + std::to_string(n) +
                             ")",
                         number);
      spec.members.push_back(static_cast<NodeId>(id));
    }
    edges.push_back(std::move(spec));
  }
  return EdgeColoredHypergraph(n, k, std::move(edges));
}

std::string write_canonical(const EdgeColoredHypergraph& h) {
  std::string out = "ecc " + std::to_string(h.num_nodes()) + " " + std::to_string(h.num_edges()) +
                    " " + std::to_string(h.num_colors()) + "\n";
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    out += std::to_string(h.color(e));
    out += ' ';
    out += format_double(h.weight(e));
    for (NodeId v : h.members(e)) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

NodeColoring parse_coloring(std::string_view text) {
  std::vector<Color> colors;
  for (const auto& [number, line] : content_lines(text)) {
    const auto t = tokens(line, " \t,");
    if (t.size() != 1) throw ParseError("expected one color per line", number);
    const auto c = parse_number<std::uint32_t>(t[0], number, "color");
    if (c < 1) throw ParseError("colors are 1-based", number);
    colors.push_back(c);
  }
  return NodeColoring(std::move(colors));
}

std::string write_coloring(const NodeColoring& y) {
  std::string out;
  for (Color c : y) {
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

BenchmarkInstance parse_benchmark(std::string_view edges_text, std::string_view labels_text,
                                  std::optional<std::string_view> node_labels_text) {
  const auto edge_lines = content_lines(edges_text);
  const auto label_lines = content_lines(labels_text);
  if (edge_lines.size() != label_lines.size())
    throw ParseError("edges file has " + std::to_string(edge_lines.size()) +
                     " lines but labels file has " + std::to_string(label_lines.size()));

  std::vector<EdgeSpec> edges;
  edges.reserve(edge_lines.size());
  std::size_t n = 0;
  Color k = 0;
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    EdgeSpec spec;
    for (auto tok : tokens(edge_lines[i].text, " \t,")) {
      const auto id = parse_number<std::uint64_t>(tok, edge_lines[i].number, "node id");
      if (id < 1) throw ParseError("benchmark node ids are 1-based", edge_lines[i].number);
      spec.members.push_back(static_cast<NodeId>(id - 1));
      n = std::max<std::size_t>(n, id);
    }
    if (spec.members.empty()) throw ParseError("empty edge", edge_lines[i].number);
    const auto t = tokens(label_lines[i].text, " \t,");
    if (t.size() != 1) throw ParseError("expected one label per line", label_lines[i].number);
    spec.color = parse_number<std::uint32_t>(t[0], label_lines[i].number, "label");
    if (spec.color < 1) throw ParseError("labels are 1-based", label_lines[i].number);
    k = std::max(k, spec.color);
    edges.push_back(std::move(spec));
  }

  BenchmarkInstance out;
  if (node_labels_text) {
    auto truth = parse_coloring(*node_labels_text);
    if (truth.size() < n)
      throw ParseError("node label file has " + std::to_string(truth.size()) +
                       " entries but edges reference node " + std::to_string(n));
    n = truth.size();
    out.truth = std::move(truth);
  }
  out.hypergraph = EdgeColoredHypergraph(n, k, std::move(edges));
  return out;
}

EdgeColoredHypergraph gen_integrality_gap(Color k) {
  if (k < 3) throw std::invalid_argument("integrality gap instance needs k >= 3");
  std::vector<EdgeSpec> edges(k);
  for (Color c = 1; c <= k; ++c) edges[c - 1].color = c;
  NodeId node = 0;
  for (Color i = 1; i <= k; ++i)
    for (Color j = i + 1; j <= k; ++j, ++node) {
      edges[i - 1].members.push_back(node);
      edges[j - 1].members.push_back(node);
    }
  return EdgeColoredHypergraph(node, k, std::move(edges));
}

EdgeColoredHypergraph gen_star() {
  return EdgeColoredHypergraph(4, 3, {{{0, 1}, 1, 1.0}, {{0, 2}, 2, 1.0}, {{0, 3}, 3, 1.0}});
}

PlantedInstance gen_random(const RandomInstanceParams& p) {
  if (p.num_nodes < 1 || p.num_edges < 1) throw std::invalid_argument("need n, m >= 1");
  if (p.max_edge_size < 2) throw std::invalid_argument("max_edge_size must be >= 2");
  if (p.num_colors < 1) throw std::invalid_argument("need k >= 1");
  if (!(p.noise >= 0.0 && p.noise <= 1.0)) throw std::invalid_argument("noise must be in [0,1]");

  Rng rng = make_rng(p.seed);
  std::uniform_int_distribution<Color> pick_color(1, p.num_colors);
  std::uniform_int_distribution<std::size_t> pick_node(0, p.num_nodes - 1);
  std::uniform_int_distribution<std::size_t> pick_size(2, p.max_edge_size);
  std::bernoulli_distribution flip(p.noise);

  std::vector<Color> truth(p.num_nodes);
  std::vector<std::vector<NodeId>> classes(p.num_colors + 1);
  for (std::size_t v = 0; v < p.num_nodes; ++v) {
    truth[v] = pick_color(rng);
    classes[truth[v]].push_back(static_cast<NodeId>(v));
  }

  std::vector<EdgeSpec> edges(p.num_edges);
  std::vector<NodeId> scratch;
  for (auto& edge : edges) {
    // The class is the truth color of a random node, so it is never empty; a
    // class smaller than the drawn size yields a smaller edge.
    const Color c = truth[pick_node(rng)];
    const auto& cls = classes[c];
    const std::size_t size = std::min(pick_size(rng), cls.size());
    if (2 * size <= cls.size()) {
      std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
      while (edge.members.size() < size) {
        const NodeId v = cls[pick(rng)];
        if (std::find(edge.members.begin(), edge.members.end(), v) == edge.members.end())
          edge.members.push_back(v);
      }
    } else {
      scratch.assign(cls.begin(), cls.end());
      for (std::size_t i = 0; i < size; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, scratch.size() - 1);
        std::swap(scratch[i], scratch[pick(rng)]);
      }
      edge.members.assign(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(size));
    }
    edge.color = c;
    if (flip(rng)) edge.color = pick_color(rng);
  }
  return {EdgeColoredHypergraph(p.num_nodes, p.num_colors, std::move(edges)),
          NodeColoring(std::move(truth)), p.noise};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace ecc
