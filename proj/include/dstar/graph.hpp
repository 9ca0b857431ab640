#pragma once

// Simple undirected graphs: construction, edge-list and graph6 I/O, degrees.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dstar {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

/// Raised for invalid graph construction parameters and malformed input.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. line() is 1-based; 0 when no line applies.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : GraphError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Simple graph on vertices 0..n-1. Immutable once built; edges are kept
/// sorted so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges (in either orientation) collapse; loops and
  /// out-of-range endpoints throw GraphError.
  Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n), adjacency_(n) {
    std::set<Edge> unique;
    for (auto [u, v] : edges) {
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      if (u >= n || v >= n)
        throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} has an endpoint >= n = " + std::to_string(n));
      unique.emplace(std::min(u, v), std::max(u, v));
    }
    edges_.assign(unique.begin(), unique.end());
    for (auto [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

using DegreeSequence = std::vector<std::size_t>;

inline DegreeSequence degrees(const Graph& g) {
  DegreeSequence d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

inline std::size_t isolated_count(const Graph& g) {
  std::size_t count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == 0 ? 1 : 0;
  return count;
}

// ---------------------------------------------------------------------------
// Standard families

enum class Family { complete, path, cycle, star, double_star };

/// complete(n), path(n) need n >= 1; cycle(n) needs n >= 3.
/// star(k) is a center 0 with k leaves.
/// double_star(a, b): centers 0 and 1 are adjacent, 0 carries a leaves and
/// 1 carries b leaves.
inline Graph make_family(Family kind, std::size_t first, std::size_t second = 0) {
  std::vector<Edge> edges;
  switch (kind) {
    case Family::complete:
      if (first < 1) throw GraphError("complete graph needs n >= 1");
      for (Vertex u = 0; u < first; ++u)
        for (Vertex v = u + 1; v < first; ++v) edges.emplace_back(u, v);
      return Graph(first, edges);
    case Family::path:
      if (first < 1) throw GraphError("path needs n >= 1");
      for (Vertex v = 1; v < first; ++v) edges.emplace_back(v - 1, v);
      return Graph(first, edges);
    case Family::cycle:
      if (first < 3) throw GraphError("cycle needs n >= 3");
      for (Vertex v = 1; v < first; ++v) edges.emplace_back(v - 1, v);
      edges.emplace_back(0, first - 1);
      return Graph(first, edges);
    case Family::star:
      for (Vertex v = 1; v <= first; ++v) edges.emplace_back(0, v);
      return Graph(first + 1, edges);
    case Family::double_star: {
      const std::size_t a = first, b = second;
      edges.emplace_back(0, 1);
      for (Vertex v = 2; v < 2 + a; ++v) edges.emplace_back(0, v);
      for (Vertex v = 2 + a; v < 2 + a + b; ++v) edges.emplace_back(1, v);
      return Graph(a + b + 2, edges);
    }
  }
  throw GraphError("unknown family");
}

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   # comment
//   n 4
//   0 1
//   ...

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool parse_natural(std::string_view token, std::size_t& out) {
  if (token.empty() || token.size() > 18) return false;
  std::size_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  out = value;
  return true;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto tokens = detail::split_ws(line);
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "n" || !detail::parse_natural(tokens[1], n))
        throw ParseError("expected header 'n <count>'", line_no);
      have_header = true;
      continue;
    }
    std::size_t u = 0, v = 0;
    if (tokens.size() != 2 || !detail::parse_natural(tokens[0], u) ||
        !detail::parse_natural(tokens[1], v))
      throw ParseError("expected 'u v' with non-negative integer labels", line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    if (u >= n || v >= n)
      throw ParseError("vertex label >= n = " + std::to_string(n), line_no);
    edges.emplace_back(u, v);
  }
  if (!have_header) throw ParseError("missing header 'n <count>'", 0);
  return Graph(n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// graph6
//
// N(n) is one byte 63+n for n <= 62, else 126 followed by three 6-bit groups.
// The upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... is packed six bits per
// byte, most significant first, padded with zeros, each byte offset by 63.

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  auto sextet = [&](std::size_t pos) -> unsigned {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte " + std::to_string(pos) + " out of range 63..126", 0);
    return c - 63u;
  };

  std::size_t pos = 0;
  std::size_t n = sextet(pos++);
  if (n == 63) {
    if (text.size() < 4) throw ParseError("truncated graph6 size field", 0);
    if (static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("graph6 8-byte size form is not supported", 0);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(pos++);
    if (n < 63) throw ParseError("graph6 long size form used for n < 63", 0);
  }

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("truncated graph6 bit field", 0);
  if (text.size() - pos > bytes) throw ParseError("trailing bytes after graph6 bit field", 0);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned byte = sextet(pos + k / 6);
      if (byte & (0x20u >> (k % 6))) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3f)));
  } else {
    throw GraphError("graph6 encoding supports n <= 258047");
  }
  unsigned current = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      current = (current << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + current));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (current << (6 - filled))));
  return out;
}

}  // namespace dstar
