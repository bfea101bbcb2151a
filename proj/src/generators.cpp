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

#include "eccb/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <ostream>
#include <random>
#include <stdexcept>

namespace eccb {

Graph path_graph(std::size_t n) {
  if (n == 0) throw std::domain_error("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::domain_error("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw std::domain_error("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::domain_error("bipartite parts must be non-empty");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, static_cast<Vertex>(a + j));
  }
  return Graph::from_edges(a + b, edges);
}

Graph petersen() {
  std::vector<std::array<int, 2>> pairs;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < pairs.size(); ++a) {
    for (Vertex b = a + 1; b < pairs.size(); ++b) {
      const auto& p = pairs[a];
      const auto& q = pairs[b];
      if (p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1]) {
        edges.emplace_back(a, b);
      }
    }
  }
  return Graph::from_edges(pairs.size(), edges);
}

Graph heawood() {
  constexpr Vertex n = 14;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    const int jump = (i % 2 == 0) ? 5 : -5;
    edges.emplace_back(i, static_cast<Vertex>((static_cast<int>(i) + jump + n) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph hoffman_singleton() {
  auto pentagon = [](int h, int j) { return static_cast<Vertex>(5 * h + j); };
  auto pentagram = [](int i, int j) { return static_cast<Vertex>(25 + 5 * i + j); };
  std::vector<Edge> edges;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      edges.emplace_back(pentagon(h, j), pentagon(h, (j + 1) % 5));
      edges.emplace_back(pentagram(h, j), pentagram(h, (j + 2) % 5));
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(pentagon(h, j), pentagram(i, (h * i + j) % 5));
      }
    }
  }
  return Graph::from_edges(50, edges);
}

namespace {

// GF(p^e) with elements encoded as base-p digit vectors of a polynomial.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q) : q_(q) {
    switch (q) {
      case 2: case 3: case 5: case 7: p_ = q; e_ = 1; break;
      case 4: p_ = 2; e_ = 2; modulus_ = {1, 1, 1}; break;     // x^2+x+1
      case 8: p_ = 2; e_ = 3; modulus_ = {1, 1, 0, 1}; break;  // x^3+x+1
      default: throw std::domain_error("unsupported field order " + std::to_string(q));
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        add_[a * q + b] = encode(add_poly(decode(a), decode(b)));
        mul_[a * q + b] = encode(mul_poly(decode(a), decode(b)));
      }
    }
  }

  std::uint32_t order() const { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }

 private:
  std::vector<std::uint32_t> decode(std::uint32_t x) const {
    std::vector<std::uint32_t> c(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      c[i] = x % p_;
      x /= p_;
    }
    return c;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
    std::uint32_t x = 0;
    for (std::uint32_t i = e_; i-- > 0;) x = x * p_ + c[i];
    return x;
  }
  std::vector<std::uint32_t> add_poly(std::vector<std::uint32_t> a,
                                      const std::vector<std::uint32_t>& b) const {
    for (std::uint32_t i = 0; i < e_; ++i) a[i] = (a[i] + b[i]) % p_;
    return a;
  }
  std::vector<std::uint32_t> mul_poly(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint32_t> prod(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      for (std::uint32_t j = 0; j < e_; ++j) {
        prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
      }
    }
    if (e_ > 1) {
      // Monic modulus: reduce from the top degree down.
      for (std::uint32_t d = 2 * e_ - 1; d >= e_; --d) {
        const std::uint32_t lead = prod[d];
        if (lead == 0) continue;
        for (std::uint32_t i = 0; i <= e_; ++i) {
          const std::uint32_t idx = d - e_ + i;
          prod[idx] = (prod[idx] + (p_ - lead) * modulus_[i]) % p_;
        }
      }
    }
    prod.resize(e_);
    return prod;
  }

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

// Normalized representatives of the 1-dimensional subspaces of GF(q)^3: the
// first non-zero coordinate is 1.
std::vector<std::array<std::uint32_t, 3>> projective_points(std::uint32_t q) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t y = 0; y < q; ++y) {
    for (std::uint32_t z = 0; z < q; ++z) out.push_back({1, y, z});
  }
  for (std::uint32_t z = 0; z < q; ++z) out.push_back({0, 1, z});
  out.push_back({0, 0, 1});
  return out;
}

}  // namespace

bool is_supported_prime_power(std::uint32_t q) {
  return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8;
}

Graph projective_plane_incidence(std::uint32_t q) {
  if (!is_supported_prime_power(q)) {
    throw std::domain_error("projective plane order must be a prime power <= 8");
  }
  const FiniteField field(q);
  const auto points = projective_points(q);
  const auto count = static_cast<Vertex>(points.size());
  std::vector<Edge> edges;
  for (Vertex p = 0; p < count; ++p) {
    for (Vertex l = 0; l < count; ++l) {
      std::uint32_t dot = 0;
      for (int i = 0; i < 3; ++i) {
        dot = field.add(dot, field.mul(points[p][i], points[l][i]));
      }
      if (dot == 0) edges.emplace_back(p, count + l);
    }
  }
  return Graph::from_edges(2 * points.size(), edges);
}

namespace {

std::vector<std::size_t> parse_sizes(std::string_view args) {
  std::vector<std::size_t> out;
  while (!args.empty()) {
    const auto comma = args.find(',');
    std::string_view token = args.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw std::invalid_argument("bad size '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph named(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const auto sizes = colon == std::string_view::npos
                         ? std::vector<std::size_t>{}
                         : parse_sizes(spec.substr(colon + 1));
  auto want = [&](std::size_t count) {
    if (sizes.size() != count) {
      throw std::invalid_argument("'" + std::string(name) + "' takes " +
                                  std::to_string(count) + " size argument(s)");
    }
  };
  if (name == "path") { want(1); return path_graph(sizes[0]); }
  if (name == "cycle") { want(1); return cycle_graph(sizes[0]); }
  if (name == "complete") { want(1); return complete_graph(sizes[0]); }
  if (name == "bipartite") { want(2); return complete_bipartite(sizes[0], sizes[1]); }
  if (name == "petersen") { want(0); return petersen(); }
  if (name == "heawood") { want(0); return heawood(); }
  if (name == "hoffman-singleton") { want(0); return hoffman_singleton(); }
  if (name == "pg") { want(1); return projective_plane_incidence(static_cast<std::uint32_t>(sizes[0])); }
  throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

namespace {

struct Attempt {
  std::optional<Graph> graph;
  std::uint64_t attempts = 0;
  std::uint64_t rejected = 0;
};

Attempt grow_once(const GeneratorConfig& cfg, std::mt19937_64& rng,
                  std::uint64_t budget) {
  const std::uint32_t n = cfg.n;
  const std::uint32_t cap = cfg.delta + cfg.degree_slack;
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Vertex> deficient(n);
  for (Vertex v = 0; v < n; ++v) deficient[v] = v;

  std::vector<Distance> dist(n, kUnreachable);
  std::vector<Vertex> ball;
  std::vector<Vertex> candidates;
  Attempt out;

  while (!deficient.empty()) {
    if (out.attempts >= budget) return out;
    ++out.attempts;
    std::uniform_int_distribution<std::size_t> pick_u(0, deficient.size() - 1);
    const Vertex u = deficient[pick_u(rng)];

    // Everything within g-2 of u would close a cycle shorter than g.
    ball.clear();
    dist[u] = 0;
    ball.push_back(u);
    for (std::size_t head = 0; head < ball.size(); ++head) {
      const Vertex x = ball[head];
      if (dist[x] + 2 >= static_cast<Distance>(cfg.girth)) continue;
      for (Vertex w : adj[x]) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[x] + 1;
          ball.push_back(w);
        }
      }
    }
    candidates.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == kUnreachable && adj[v].size() < cap) candidates.push_back(v);
    }
    for (Vertex x : ball) dist[x] = kUnreachable;

    if (candidates.empty()) {
      ++out.rejected;
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick_v(0, candidates.size() - 1);
    const Vertex v = candidates[pick_v(rng)];
    adj[u].push_back(v);
    adj[v].push_back(u);
    std::erase_if(deficient, [&](Vertex x) { return adj[x].size() >= cfg.delta; });
  }

  // Joining components never closes a cycle.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  Graph partial = Graph::from_edges(n, edges);
  std::vector<int> component(n, -1);
  std::vector<std::vector<Vertex>> members;
  for (Vertex s = 0; s < n; ++s) {
    if (component[s] != -1) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    const auto d = bfs_distances(partial, s);
    for (Vertex v = 0; v < n; ++v) {
      if (d[v] != kUnreachable) {
        component[v] = id;
        members.back().push_back(v);
      }
    }
  }
  for (std::size_t c = 1; c < members.size(); ++c) {
    std::uniform_int_distribution<std::size_t> in_c(0, members[c].size() - 1);
    std::uniform_int_distribution<std::size_t> in_prev(0, c - 1);
    const auto& prev = members[in_prev(rng)];
    std::uniform_int_distribution<std::size_t> in_p(0, prev.size() - 1);
    edges.emplace_back(members[c][in_c(rng)], prev[in_p(rng)]);
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

}  // namespace

GeneratorResult random_min_degree_girth(const GeneratorConfig& cfg) {
  if (cfg.delta < 2) throw std::invalid_argument("generator needs delta >= 2");
  if (cfg.girth < 3) throw std::invalid_argument("generator needs girth >= 3");
  if (cfg.n < cfg.delta + 1) throw std::invalid_argument("generator needs n >= delta + 1");

  const std::uint64_t budget = cfg.max_edge_attempts_per_restart != 0
                                   ? cfg.max_edge_attempts_per_restart
                                   : 50ull * cfg.n;
  GeneratorFailure failure;
  for (std::uint32_t restart = 0; restart < cfg.max_restarts; ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32), restart};
    std::mt19937_64 rng(seq);
    Attempt attempt = grow_once(cfg, rng, budget);
    failure.attempts += attempt.attempts;
    failure.rejected += attempt.rejected;
    failure.restarts = restart + 1;
    if (!attempt.graph) continue;
    const Graph& g = *attempt.graph;
    const auto measured = girth(g);
    if (is_connected(g) && g.min_degree() >= cfg.delta &&
        (!measured || *measured >= cfg.girth)) {
      return std::move(*attempt.graph);
    }
  }
  failure.reason = "no connected graph with min degree " + std::to_string(cfg.delta) +
                   " and girth >= " + std::to_string(cfg.girth) + " on " +
                   std::to_string(cfg.n) + " vertices after " +
                   std::to_string(failure.restarts) + " restarts";
  return failure;
}

void write_generated(std::ostream& out, const Graph& g, const GeneratorConfig& cfg) {
  write_edge_list(out, g);
  out << "# seed=" << cfg.seed << " delta=" << cfg.delta << " g=" << cfg.girth << '\n';
}

}  // namespace eccb
