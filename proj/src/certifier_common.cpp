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

#include <algorithm>
#include <numeric>
#include <tuple>

#include "certifier_internal.hpp"

namespace eccb::detail {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Forest bfs_forest(const Graph& g, std::span<const Vertex> sources) {
  Forest f;
  f.dist = bfs_distances(g, sources);
  f.parent.assign(g.order(), 0);
  f.root.assign(g.order(), 0);
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return static_cast<std::uint32_t>(f.dist[a]) < static_cast<std::uint32_t>(f.dist[b]);
  });
  for (Vertex x : order) {
    if (f.dist[x] == kUnreachable) continue;
    if (f.dist[x] == 0) {
      f.parent[x] = x;
      f.root[x] = x;
      continue;
    }
    bool found = false;
    for (Vertex w : g.neighbors(x)) {
      if (f.dist[w] != f.dist[x] - 1) continue;
      if (!found || std::tie(f.root[w], w) < std::tie(f.root[x], f.parent[x])) {
        f.root[x] = f.root[w];
        f.parent[x] = w;
        found = true;
      }
    }
  }
  return f;
}

std::vector<Vertex> path_to_root(const Forest& f, Vertex x) {
  std::vector<Vertex> path{x};
  while (f.parent[path.back()] != path.back()) path.push_back(f.parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

SpanningTree join_cells(const Graph& g, const Forest& forest,
                        const std::vector<std::size_t>& cell_of_vertex,
                        std::size_t cell_count, std::span<const Edge> fixed,
                        std::span<const Edge> links, std::span<const Vertex> sources) {
  std::vector<Edge> base;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (forest.parent[x] != x) base.emplace_back(x, forest.parent[x]);
  }
  base.insert(base.end(), fixed.begin(), fixed.end());

  SpanningTree out;
  // Primary: the discovery links.
  {
    DisjointSets cells(cell_count);
    bool ok = links.size() + 1 == cell_count;
    for (const Edge& e : links) {
      if (!ok) break;
      ok = g.has_edge(e.u, e.v) && cells.unite(cell_of_vertex[e.u], cell_of_vertex[e.v]);
    }
    if (ok) out.connectors.assign(links.begin(), links.end());
  }
  if (out.connectors.size() + 1 != cell_count) {
    // Fallback: Kruskal over cross-cell edges, cheapest detour first.
    out.connectors.clear();
    out.used_fallback = true;
    std::vector<std::pair<Distance, Edge>> candidates;
    for (const Edge& e : g.edges()) {
      if (cell_of_vertex[e.u] == cell_of_vertex[e.v]) continue;
      candidates.emplace_back(forest.dist[e.u] + forest.dist[e.v] + 1, e);
    }
    std::sort(candidates.begin(), candidates.end());
    DisjointSets cells(cell_count);
    for (const auto& [cost, e] : candidates) {
      if (cells.unite(cell_of_vertex[e.u], cell_of_vertex[e.v])) out.connectors.push_back(e);
    }
  }
  base.insert(base.end(), out.connectors.begin(), out.connectors.end());
  out.tree = Graph::from_edges(g.order(), base);

  const Forest in_tree = bfs_forest(out.tree, sources);
  if (in_tree.dist != forest.dist) {
    throw CertificationError("construction invariant violated: tree does not preserve "
                             "distances to the target set");
  }
  out.parent = in_tree.parent;
  out.assignment = in_tree.root;
  return out;
}

Rational weighted_ecc_sum(const Graph& g, std::span<const Vertex> vertices,
                          std::span<const Rational> weights) {
  Rational sum;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (sgn(weights[i]) == 0) continue;
    sum += weights[i] * eccentricity(g, vertices[i]);
  }
  return sum;
}

Rational to_rational(std::uint64_t v) { return Rational(Integer(std::to_string(v))); }

void add_step(std::vector<ChainStep>& steps, std::string name, const Rational& lhs,
              Relation relation, const Rational& rhs) {
  ChainStep s;
  s.name = std::move(name);
  s.lhs = lhs;
  s.rhs = rhs;
  s.lhs.canonicalize();
  s.rhs.canonicalize();
  s.relation = relation;
  s.holds = relation == Relation::Equal ? s.lhs == s.rhs : s.lhs <= s.rhs;
  steps.push_back(std::move(s));
}

void add_check(std::vector<StructuralCheck>& checks, std::string name, bool holds,
               std::string detail) {
  checks.push_back({std::move(name), holds, std::move(detail)});
}

bool is_spanning_tree(const Graph& g, const Graph& tree) {
  if (tree.order() != g.order() || tree.size() + 1 != g.order()) return false;
  for (const Edge& e : tree.edges()) {
    if (!g.has_edge(e.u, e.v)) return false;
  }
  return is_connected(tree);
}

nlohmann::ordered_json steps_json(const std::vector<ChainStep>& steps) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& s : steps) {
    nlohmann::ordered_json row;
    row["step"] = s.name;
    row["lhs"] = to_fraction(s.lhs);
    row["relation"] = s.relation == Relation::Equal ? "==" : "<=";
    row["rhs"] = to_fraction(s.rhs);
    row["holds"] = s.holds;
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json checks_json(const std::vector<StructuralCheck>& checks) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json row;
    row["check"] = c.name;
    row["holds"] = c.holds;
    if (!c.detail.empty()) row["detail"] = c.detail;
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json rational_map_json(const std::map<std::string, Rational>& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m) out[k] = to_fraction(v);
  return out;
}

}  // namespace eccb::detail

namespace eccb {

std::vector<Rational> cell_weights(const std::vector<Vertex>& assignment,
                                   const std::vector<Vertex>& targets) {
  std::vector<Rational> out(targets.size());
  std::vector<std::size_t> index(assignment.size(), targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) index[targets[i]] = i;
  for (Vertex owner : assignment) {
    if (owner < index.size() && index[owner] < targets.size()) out[index[owner]] += 1;
  }
  return out;
}

}  // namespace eccb
