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
#include <limits>
#include <stdexcept>

#include "eccb/graph.hpp"

namespace eccb {

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  const Vertex sources[] = {source};
  return bfs_distances(g, sources);
}

std::vector<Distance> bfs_distances(const Graph& g,
                                    std::span<const Vertex> sources) {
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  for (Vertex s : sources) {
    if (s >= g.order()) throw std::out_of_range("BFS source out of range");
    if (dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, Vertex{0});
  return std::none_of(dist.begin(), dist.end(),
                      [](Distance d) { return d == kUnreachable; });
}

std::uint32_t eccentricity(const Graph& g, Vertex v) {
  std::uint32_t ecc = 0;
  for (Distance d : bfs_distances(g, v)) {
    if (d == kUnreachable) throw DisconnectedGraphError();
    ecc = std::max(ecc, static_cast<std::uint32_t>(d));
  }
  return ecc;
}

EccentricityProfile eccentricity_profile(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("eccentricity of the empty graph");
  EccentricityProfile p;
  p.ecc.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p.ecc[v] = eccentricity(g, v);
  for (auto e : p.ecc) p.total += e;
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  p.avec = Rational(Integer(std::to_string(p.total)),
                    Integer(std::to_string(g.order())));
  p.avec.canonicalize();
  return p;
}

nlohmann::ordered_json to_json(const EccentricityProfile& p) {
  nlohmann::ordered_json out;
  out["ecc"] = p.ecc;
  out["total"] = p.total;
  out["avec"] = to_fraction(p.avec);
  out["avecDecimal"] = to_decimal(p.avec);
  out["radius"] = p.radius;
  out["diameter"] = p.diameter;
  return out;
}

std::optional<std::uint32_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::vector<Distance> dist(n, kUnreachable);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    for (Vertex v : queue) dist[v] = kUnreachable;
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      // Any cycle found from here on is at least 2*dist[u]+1 long.
      if (2 * static_cast<std::uint32_t>(dist[u]) + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, static_cast<std::uint32_t>(dist[u] + dist[w] + 1));
        }
      }
    }
    if (best == 3) break;
  }
  if (best == std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return best;
}

Rational path_avec_closed_form(std::uint64_t n) {
  if (n == 0) throw std::domain_error("path order must be positive");
  const Integer nn(std::to_string(n));
  Rational inner = Rational(3 * nn * nn, 4) - Rational(nn, 2);
  inner.canonicalize();
  Rational out(floor(inner), nn);
  out.canonicalize();
  return out;
}

WeightFunction::WeightFunction(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  for (auto& w : weights_) {
    w.canonicalize();
    if (sgn(w) < 0) throw std::invalid_argument("negative vertex weight");
    total_ += w;
  }
}

WeightFunction WeightFunction::uniform(std::size_t n) {
  return WeightFunction(std::vector<Rational>(n, Rational(1)));
}

Rational weighted_avec(const Graph& g, const WeightFunction& c) {
  if (c.size() != g.order()) {
    throw std::invalid_argument("weight function size does not match graph order");
  }
  if (sgn(c.total()) <= 0) throw std::domain_error("total weight must be positive");
  if (!is_connected(g)) throw DisconnectedGraphError();
  Rational weighted_sum;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (sgn(c[v]) == 0) continue;
    weighted_sum += c[v] * eccentricity(g, v);
  }
  Rational out = weighted_sum / c.total();
  out.canonicalize();
  return out;
}

}  // namespace eccb
