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

#ifndef ECCB_GRAPH_HPP_
#define ECCB_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eccb/rational.hpp"
#include "json.hpp"

namespace eccb {

using Vertex = std::uint32_t;
using Distance = std::int32_t;

inline constexpr Distance kUnreachable = -1;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has_endpoint(Vertex x) const { return u == x || v == x; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError()
      : std::runtime_error("graph is disconnected; eccentricity undefined") {}
};

// Simple undirected graph on vertices 0..n-1.  Immutable once built; the
// adjacency lists are sorted so every traversal is deterministic.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges are merged silently.  Self-loops and out-of-range
  // endpoints throw std::invalid_argument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  // Lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  // Index of the edge in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.order() == b.order();
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// Edge-list text: a header line "n m", then m lines "u v".  Lines whose first
// non-blank character is '#' are comments and blank lines are skipped.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);

nlohmann::ordered_json to_json(const Graph& g);

// --- distances ------------------------------------------------------------

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

// Multi-source BFS: distance from every vertex to the nearest source.
std::vector<Distance> bfs_distances(const Graph& g,
                                    std::span<const Vertex> sources);

bool is_connected(const Graph& g);

// Largest distance from v.  Throws DisconnectedGraphError if some vertex is
// unreachable.
std::uint32_t eccentricity(const Graph& g, Vertex v);

struct EccentricityProfile {
  std::vector<std::uint32_t> ecc;
  std::uint64_t total = 0;
  Rational avec;
  std::uint32_t radius = 0;
  std::uint32_t diameter = 0;
};

// n BFS runs.  Throws DisconnectedGraphError for disconnected input and
// std::domain_error for the empty graph.
EccentricityProfile eccentricity_profile(const Graph& g);

nlohmann::ordered_json to_json(const EccentricityProfile& p);

// Shortest cycle length; nullopt for forests.
std::optional<std::uint32_t> girth(const Graph& g);

// (1/n) * floor(3n^2/4 - n/2), the average eccentricity of the path P_n.
Rational path_avec_closed_form(std::uint64_t n);

// --- weighted eccentricity --------------------------------------------------

class WeightFunction {
 public:
  WeightFunction() = default;
  // Throws std::invalid_argument on a negative weight.
  explicit WeightFunction(std::vector<Rational> weights);

  static WeightFunction uniform(std::size_t n);

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](Vertex v) const { return weights_[v]; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& total() const { return total_; }

 private:
  std::vector<Rational> weights_;
  Rational total_;
};

// sum_x c(x) e(x) / N.  Eccentricities are only computed where c(x) > 0.
Rational weighted_avec(const Graph& g, const WeightFunction& c);

// --- derived graphs ---------------------------------------------------------

// u ~ v iff 1 <= d(u, v) <= k.
Graph power_graph(const Graph& g, std::uint32_t k);

struct LineGraph {
  Graph graph;
  // Vertex i of graph is edge_of[i] in the source graph (== source.edges()[i]).
  std::vector<Edge> edge_of;
};

LineGraph line_graph(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // Vertex i of graph is original[i] in the source graph.
  std::vector<Vertex> original;
};

// Vertices are relabeled in the order given.  Throws std::domain_error when
// the set is empty and std::invalid_argument on repeats or bad ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

// G^k[S] without materialising G^k: BFS from each member of the subset.
// Equivalent to induced_subgraph(power_graph(g, k), subset).
InducedSubgraph induced_power(const Graph& g, std::span<const Vertex> subset,
                              std::uint32_t k);

}  // namespace eccb

#endif  // ECCB_GRAPH_HPP_
