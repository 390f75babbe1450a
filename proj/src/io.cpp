#include "skelrecon/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "skelrecon/error.hpp"

namespace skelrecon {
namespace {

struct Line {
  int number = 0;
  std::string keyword;
  std::vector<long long> values;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::istringstream in{std::string(raw)};
    Line line;
    line.number = number;
    if (!(in >> line.keyword) || line.keyword[0] == '#') continue;
    std::string token;
    while (in >> token) {
      long long value = 0;
      const auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || p != token.data() + token.size())
        fail(number, "expected an integer, got '" + token + "'");
      line.values.push_back(value);
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

int single_value(const Line& line) {
  if (line.values.size() != 1) fail(line.number, "'" + line.keyword + "' takes one value");
  if (line.values[0] < 0 || line.values[0] > 1'000'000'000)
    fail(line.number, "value out of range");
  return static_cast<int>(line.values[0]);
}

VertexSet vertex_set(const Line& line, std::optional<int> n) {
  if (line.values.empty()) fail(line.number, "'" + line.keyword + "' needs vertices");
  VertexSet s;
  for (long long v : line.values) {
    if (v < 0 || (n && v >= *n) || v > 1'000'000'000)
      fail(line.number, "vertex " + std::to_string(v) + " out of range");
    s.push_back(static_cast<Vertex>(v));
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    fail(line.number, "repeated vertex");
  return s;
}

// Shared header handling: `d` and `vertices` at most once each.
struct Header {
  std::optional<int> d, n;

  bool take(const Line& line) {
    if (line.keyword == "d") {
      if (d) fail(line.number, "duplicate 'd'");
      d = single_value(line);
      return true;
    }
    if (line.keyword == "vertices") {
      if (n) fail(line.number, "duplicate 'vertices'");
      n = single_value(line);
      return true;
    }
    return false;
  }
};

std::optional<int> face_rank(const std::string& keyword) {
  if (keyword.rfind("face", 0) != 0 || keyword.size() == 4) return std::nullopt;
  int r = 0;
  const auto [p, ec] = std::from_chars(keyword.data() + 4, keyword.data() + keyword.size(), r);
  if (ec != std::errc() || p != keyword.data() + keyword.size() || r < 2) return std::nullopt;
  return r;
}

std::vector<Edge> collect_edges(const std::vector<std::pair<int, VertexSet>>& raw) {
  std::vector<Edge> edges;
  for (const auto& [line, e] : raw) {
    if (e.size() != 2) fail(line, "an edge needs two distinct vertices");
    edges.emplace_back(e[0], e[1]);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error(ErrorCode::ParseError, "duplicate edge " + std::to_string(edges[i].first) +
                                             " " + std::to_string(edges[i].second));
  return edges;
}

void append_set(std::string& out, std::string_view keyword, const VertexSet& s) {
  out += keyword;
  for (Vertex v : s) {
    out += ' ';
    out += std::to_string(v);
  }
  out += '\n';
}

}  // namespace

PolytopeSpec parse_incidence(std::string_view text) {
  Header h;
  std::vector<Line> facets;
  for (auto& line : tokenize(text)) {
    if (h.take(line)) continue;
    if (line.keyword != "facet") fail(line.number, "unknown keyword '" + line.keyword + "'");
    if (!h.d || !h.n) fail(line.number, "'facet' before the 'd' and 'vertices' lines");
    facets.push_back(std::move(line));
  }
  if (!h.d || !h.n) fail(0, "missing 'd' or 'vertices'");
  PolytopeSpec spec;
  spec.d = *h.d;
  spec.n = *h.n;
  for (const auto& line : facets) spec.facets.push_back(vertex_set(line, h.n));
  spec.canonicalize();
  return spec;
}

std::string write_incidence(const PolytopeSpec& spec) {
  PolytopeSpec s = spec;
  s.canonicalize();
  std::string out = "d " + std::to_string(s.d) + "\nvertices " + std::to_string(s.n) + "\n";
  for (const auto& f : s.facets) append_set(out, "facet", f);
  return out;
}

KSkeleton parse_skeleton(std::string_view text) {
  Header h;
  std::vector<std::pair<int, VertexSet>> raw_edges;
  std::map<int, std::vector<VertexSet>> faces;
  std::vector<Line> pending;
  for (auto& line : tokenize(text)) {
    if (h.take(line)) continue;
    if (line.keyword != "edge" && !face_rank(line.keyword))
      fail(line.number, "unknown keyword '" + line.keyword + "'");
    pending.push_back(std::move(line));
  }
  if (!h.d || !h.n) fail(0, "missing 'd' or 'vertices'");
  for (const auto& line : pending) {
    if (line.keyword == "edge")
      raw_edges.emplace_back(line.number, vertex_set(line, h.n));
    else
      faces[*face_rank(line.keyword)].push_back(vertex_set(line, h.n));
  }
  const int k = faces.empty() ? 2 : std::max(2, faces.rbegin()->first);
  KSkeleton sk;
  sk.d = *h.d;
  sk.k = k;
  sk.graph = Graph::from_edges(*h.n, collect_edges(raw_edges));
  sk.faces_by_dim.resize(k + 1);
  for (int v = 0; v < *h.n; ++v) sk.faces_by_dim[0].push_back({v});
  for (auto [u, v] : sk.graph.edges()) sk.faces_by_dim[1].push_back({u, v});
  for (auto& [r, list] : faces) {
    canonicalize(list);
    sk.faces_by_dim[r] = std::move(list);
  }
  return sk;
}

std::string write_skeleton(const KSkeleton& sk) {
  std::string out = "d " + std::to_string(sk.d) + "\nvertices " +
                    std::to_string(sk.graph.num_vertices()) + "\n";
  for (auto [u, v] : sk.graph.edges()) append_set(out, "edge", {u, v});
  for (int r = 2; r <= sk.k && r < static_cast<int>(sk.faces_by_dim.size()); ++r)
    for (const auto& f : sk.faces(r)) append_set(out, "face" + std::to_string(r), f);
  return out;
}

EdgeList parse_edge_list(std::string_view text) {
  Header h;
  std::vector<std::pair<int, VertexSet>> raw;
  std::vector<Line> pending;
  for (auto& line : tokenize(text)) {
    if (h.take(line)) continue;
    if (line.keyword != "edge") fail(line.number, "unknown keyword '" + line.keyword + "'");
    pending.push_back(std::move(line));
  }
  int n = h.n.value_or(0);
  for (const auto& line : pending) {
    raw.emplace_back(line.number, vertex_set(line, h.n));
    if (!h.n) n = std::max(n, raw.back().second.back() + 1);
  }
  return EdgeList{Graph::from_edges(n, collect_edges(raw)), h.d};
}

std::string write_edge_list(const Graph& g, std::optional<int> d) {
  std::string out;
  if (d) out += "d " + std::to_string(*d) + "\n";
  out += "vertices " + std::to_string(g.num_vertices()) + "\n";
  for (auto [u, v] : g.edges()) append_set(out, "edge", {u, v});
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace skelrecon
