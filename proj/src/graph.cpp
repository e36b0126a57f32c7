#include "chromakac/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace chromakac {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (VertexMask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : to_vector()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

GraphFamily parse_family(std::string_view name) {
  if (name == "path") return GraphFamily::path;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "complete") return GraphFamily::complete;
  if (name == "star") return GraphFamily::star;
  if (name == "random") return GraphFamily::random;
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (vertex_count > 64) throw std::invalid_argument("vertex count exceeds bitmask width (64)");
  std::set<std::pair<int, int>> unique;
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    unique.emplace(std::min(u, v), std::max(u, v));
  }
  edges_.assign(unique.begin(), unique.end());
  adjacency_.assign(static_cast<std::size_t>(vertex_count), 0);
  for (auto [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    adjacency_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
  }
}

namespace {

bool parse_int(std::string_view token, int& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

Graph Graph::parse(std::string_view text, const Limits& limits) {
  int vertex_count = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    // trim
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }

    if (vertex_count < 0) {
      int l = 0;
      if (tokens.size() != 1 || !parse_int(tokens[0], l))
        throw parse_error("expected the vertex count", line_no);
      if (l < 1) throw parse_error("vertex count must be at least 1", line_no);
      if (l > limits.max_vertices)
        throw size_limit_error("vertex count exceeds the configured cap",
                               static_cast<std::uint64_t>(l),
                               static_cast<std::uint64_t>(limits.max_vertices));
      vertex_count = l;
      continue;
    }

    int u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
      throw parse_error("expected an edge \"u v\"", line_no);
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw parse_error("vertex index out of range [0, " + std::to_string(vertex_count) + ")",
                        line_no);
    if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u), line_no);
    edges.emplace_back(u, v);
  }
  if (vertex_count < 0) throw parse_error("missing vertex count", line_no);
  return Graph(vertex_count, edges);
}

Graph Graph::generate(GraphFamily family, int n, std::optional<std::uint64_t> seed,
                      std::optional<double> p, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("graph size must be at least 1");
  if (n > limits.max_vertices)
    throw size_limit_error("graph size exceeds the configured cap", static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(limits.max_vertices));
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case GraphFamily::path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphFamily::cycle:
      if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      break;
    case GraphFamily::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case GraphFamily::star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case GraphFamily::random: {
      if (!seed) throw std::invalid_argument("random graphs need a seed");
      if (!p || *p < 0.0 || *p > 1.0)
        throw std::invalid_argument("random graphs need an edge probability in [0,1]");
      std::uint64_t state = *seed;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          // one 53-bit uniform draw per pair, in lexicographic pair order
          double draw = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
          if (draw < *p) edges.emplace_back(u, v);
        }
      }
      break;
    }
  }
  return Graph(n, edges);
}

void Graph::check_in_range(VertexSet s) const {
  if (!s.is_subset_of(vertices()))
    throw std::invalid_argument("vertex set " + s.to_string() + " is not within [0, " +
                                std::to_string(vertex_count_) + ")");
}

int Graph::edge_count(VertexSet s) const {
  check_in_range(s);
  int twice = 0;
  for (VertexMask m = s.bits(); m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    twice += std::popcount(neighbors(v) & s.bits());
  }
  return twice / 2;
}

int Graph::cross_edge_count(VertexSet s, VertexSet t) const {
  check_in_range(s);
  check_in_range(t);
  if (s.intersects(t))
    throw std::invalid_argument("cross_edge_count requires disjoint vertex sets");
  int count = 0;
  for (VertexMask m = s.bits(); m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    count += std::popcount(neighbors(v) & t.bits());
  }
  return count;
}

bool Graph::is_connected(VertexSet s) const {
  check_in_range(s);
  if (s.empty()) throw std::invalid_argument("connectivity of the empty set is undefined");
  VertexMask reached = VertexMask{1} << s.min_vertex();
  VertexMask frontier = reached;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1)
      next |= neighbors(std::countr_zero(m));
    frontier = next & s.bits() & ~reached;
    reached |= frontier;
  }
  return reached == s.bits();
}

int Graph::form_beta_beta_minus_2rho(VertexSet s) const {
  if (s.empty() || !is_connected(s))
    throw std::invalid_argument("root support must be non-empty and connected");
  return -2 * edge_count(s);
}

Graph Graph::induced(VertexSet s) const {
  check_in_range(s);
  std::vector<int> members = s.to_vector();
  std::vector<int> relabel(static_cast<std::size_t>(vertex_count_), -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    relabel[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : edges_)
    if (s.contains(u) && s.contains(v))
      edges.emplace_back(relabel[static_cast<std::size_t>(u)],
                         relabel[static_cast<std::size_t>(v)]);
  return Graph(static_cast<int>(members.size()), edges);
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << vertex_count_ << '\n';
  for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace chromakac
