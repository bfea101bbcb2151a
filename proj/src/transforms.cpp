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

#include <limits>
#include <stdexcept>

#include "eccb/graph.hpp"

namespace eccb {

namespace {

// BFS from source, stopping after depth k.  Returns the visited vertices with
// their distances in `dist`; the caller resets them.
void bounded_bfs(const Graph& g, Vertex source, std::uint32_t k,
                 std::vector<Distance>& dist, std::vector<Vertex>& visited) {
  visited.clear();
  dist[source] = 0;
  visited.push_back(source);
  for (std::size_t head = 0; head < visited.size(); ++head) {
    const Vertex u = visited[head];
    if (static_cast<std::uint32_t>(dist[u]) == k) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        visited.push_back(w);
      }
    }
  }
}

}  // namespace

Graph power_graph(const Graph& g, std::uint32_t k) {
  if (k == 0) throw std::domain_error("graph power exponent must be positive");
  if (k == 1) return g;
  std::vector<Edge> edges;
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::vector<Vertex> visited;
  for (Vertex u = 0; u < g.order(); ++u) {
    bounded_bfs(g, u, k, dist, visited);
    for (Vertex w : visited) {
      if (w > u) edges.emplace_back(u, w);
      dist[w] = kUnreachable;
    }
  }
  return Graph::from_edges(g.order(), edges);
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of = g.edges();
  std::vector<Edge> edges;
  // Edges incident with a common vertex form a clique in L(G).
  std::vector<std::vector<Vertex>> incident(g.order());
  for (std::size_t i = 0; i < out.edge_of.size(); ++i) {
    incident[out.edge_of[i].u].push_back(static_cast<Vertex>(i));
    incident[out.edge_of[i].v].push_back(static_cast<Vertex>(i));
  }
  for (const auto& star : incident) {
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) {
        edges.emplace_back(star[a], star[b]);
      }
    }
  }
  out.graph = Graph::from_edges(out.edge_of.size(), edges);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw std::domain_error("induced subgraph of an empty set");
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.order(), kAbsent);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const Vertex v = subset[i];
    if (v >= g.order()) throw std::invalid_argument("subset vertex out of range");
    if (local[v] != kAbsent) throw std::invalid_argument("repeated subset vertex");
    local[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kAbsent && local[e.v] != kAbsent) {
      edges.emplace_back(local[e.u], local[e.v]);
    }
  }
  InducedSubgraph out;
  out.graph = Graph::from_edges(subset.size(), edges);
  out.original.assign(subset.begin(), subset.end());
  return out;
}

InducedSubgraph induced_power(const Graph& g, std::span<const Vertex> subset,
                              std::uint32_t k) {
  if (subset.empty()) throw std::domain_error("induced subgraph of an empty set");
  if (k == 0) throw std::domain_error("graph power exponent must be positive");
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.order(), kAbsent);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const Vertex v = subset[i];
    if (v >= g.order()) throw std::invalid_argument("subset vertex out of range");
    if (local[v] != kAbsent) throw std::invalid_argument("repeated subset vertex");
    local[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::vector<Vertex> visited;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    bounded_bfs(g, subset[i], k, dist, visited);
    for (Vertex w : visited) {
      if (local[w] != kAbsent && local[w] > i) {
        edges.emplace_back(static_cast<Vertex>(i), local[w]);
      }
      dist[w] = kUnreachable;
    }
  }
  InducedSubgraph out;
  out.graph = Graph::from_edges(subset.size(), edges);
  out.original.assign(subset.begin(), subset.end());
  return out;
}

}  // namespace eccb
