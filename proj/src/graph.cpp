// Copyright 2026 The eccb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eccb/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace eccb {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("too many vertices");
  }
  Graph g;
  g.adjacency_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw std::invalid_argument("vertex " + std::to_string(e.v) +
                                  " out of range for n=" + std::to_string(n));
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::size_t Graph::min_degree() const {
  std::size_t best = adjacency_.empty() ? 0 : adjacency_.front().size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u == v) return std::nullopt;
  Edge key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits a line into exactly two non-negative integers.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  auto read = [&line](std::uint64_t& out) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos) return false;
    line.remove_prefix(start);
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), out);
    if (ec != std::errc() || ptr == line.data()) return false;
    line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
    return line.empty() || line.front() == ' ' || line.front() == '\t';
  };
  if (!read(a) || !read(b)) return false;
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError(line_no, "expected two non-negative integers, got '" +
                                    std::string(line) + "'");
    }
    if (!have_header) {
      if (a > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "vertex count too large");
      }
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(line_no, "more edge lines than the declared m=" +
                                    std::to_string(m));
    }
    if (a >= n || b >= n) {
      throw ParseError(line_no, "vertex id out of range for n=" + std::to_string(n));
    }
    if (a == b) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (edges.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

nlohmann::ordered_json to_json(const Graph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  nlohmann::ordered_json out;
  out["n"] = g.order();
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace eccb
