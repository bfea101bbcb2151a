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

#include "certifier_internal.hpp"

namespace eccb {

using detail::add_check;
using detail::add_step;
using detail::to_rational;

std::uint32_t edge_distance(const std::vector<Distance>& dist_to_set, const Edge& e) {
  auto as_unsigned = [](Distance d) {
    return d == kUnreachable ? std::numeric_limits<std::uint32_t>::max()
                             : static_cast<std::uint32_t>(d);
  };
  return std::min(as_unsigned(dist_to_set[e.u]), as_unsigned(dist_to_set[e.v]));
}

namespace {

std::vector<Vertex> endpoints(const std::vector<Edge>& edges) {
  std::vector<Vertex> out;
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SpacedMatching build_spaced_matching(const Graph& g, std::uint32_t spacing,
                                     std::optional<Edge> start) {
  if (spacing < 2) throw std::domain_error("matching spacing must be at least 2");
  if (g.size() == 0) throw std::domain_error("graph has no edges");
  const Edge first = start.value_or(g.edges().front());
  if (!g.has_edge(first.u, first.v)) throw std::invalid_argument("start edge not in graph");

  SpacedMatching out;
  out.edges.push_back(first);
  const std::uint32_t target = spacing - 1;
  while (true) {
    const auto matched = endpoints(out.edges);
    const detail::Forest f = detail::bfs_forest(g, matched);
    std::optional<Edge> next;
    bool far_edge = false;
    for (const Edge& e : g.edges()) {
      const std::uint32_t d = edge_distance(f.dist, e);
      if (d == std::numeric_limits<std::uint32_t>::max()) throw DisconnectedGraphError();
      if (d >= target) far_edge = true;
      if (d == target && !next) next = e;
    }
    if (!far_edge) break;
    if (!next) {
      throw CertificationError("construction invariant violated: no edge at distance " +
                               std::to_string(target));
    }
    // Walk from the nearer endpoint back to V(M); the middle edge of that
    // path joins the old and new cells.
    Vertex near = next->u;
    if (f.dist[next->v] < f.dist[near]) near = next->v;
    const auto path = detail::path_to_root(f, near);
    const std::size_t mid = spacing / 2;
    out.links.emplace_back(path[mid - 1], path[mid]);
    out.edges.push_back(*next);
  }
  return out;
}

SpanningTree build_spanning_tree_from_matching(const Graph& g,
                                               const SpacedMatching& matching) {
  if (matching.edges.empty()) throw std::domain_error("empty matching");
  const auto matched = endpoints(matching.edges);
  const detail::Forest f = detail::bfs_forest(g, matched);
  std::vector<std::size_t> owner(g.order(), 0);
  for (std::size_t i = 0; i < matching.edges.size(); ++i) {
    owner[matching.edges[i].u] = i;
    owner[matching.edges[i].v] = i;
  }
  std::vector<std::size_t> cell(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    if (f.dist[x] == kUnreachable) throw DisconnectedGraphError();
    cell[x] = owner[f.root[x]];
  }
  return detail::join_cells(g, f, cell, matching.edges.size(), matching.edges,
                            matching.links, matched);
}

bool MatchingCertificate::all_steps_hold() const {
  return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.holds; }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

MatchingCertificate certify_even(const Graph& g, bool use_max_degree) {
  if (g.order() == 0 || !is_connected(g)) {
    throw CertificationError("graph is disconnected");
  }
  const GraphParams params = measure(g);
  if (params.min_degree < 3) {
    throw CertificationError("not certifiable: requires minimum degree delta >= 3");
  }
  if (!params.girth || *params.girth % 2 == 1) {
    throw CertificationError("girth is odd; use the odd (packing) certificate");
  }
  const std::uint32_t girth_value = *params.girth;
  const Rational gg = to_rational(girth_value);
  const Rational n = to_rational(g.order());

  MatchingCertificate cert;
  cert.use_max_degree = use_max_degree;
  cert.girth = girth_value;
  cert.bound_id = use_max_degree ? BoundId::ThmGirthMaxDegEven : BoundId::ThmGirthEven;

  std::optional<Edge> start;
  Vertex hub = 0;
  if (use_max_degree) {
    for (Vertex v = 1; v < g.order(); ++v) {
      if (g.degree(v) > g.degree(hub)) hub = v;
    }
    start = Edge(hub, g.neighbors(hub).front());
  }
  cert.matching = build_spaced_matching(g, girth_value, start);
  cert.matched_vertices = endpoints(cert.matching.edges);
  cert.tree = build_spanning_tree_from_matching(g, cert.matching);
  const Graph& tree = cert.tree.tree;
  const auto& edges = cert.matching.edges;
  const auto& matched = cert.matched_vertices;
  cert.vertex_weights = cell_weights(cert.tree.assignment, matched);
  auto weight_of = [&](Vertex v) -> const Rational& {
    const auto it = std::lower_bound(matched.begin(), matched.end(), v);
    return cert.vertex_weights[static_cast<std::size_t>(it - matched.begin())];
  };
  for (const Edge& e : edges) cert.edge_weights.push_back(weight_of(e.u) + weight_of(e.v));

  // --- structure ---
  const auto dist_g = bfs_distances(g, matched);
  add_check(cert.checks, "tree is a spanning tree of G", detail::is_spanning_tree(g, tree));
  add_check(cert.checks, "M is a matching", matched.size() == 2 * edges.size());
  {
    bool spaced = true;
    for (std::size_t i = 0; i < edges.size() && spaced; ++i) {
      const Vertex ends[] = {edges[i].u, edges[i].v};
      const auto d = bfs_distances(g, ends);
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (edge_distance(d, edges[j]) < girth_value - 1) {
          spaced = false;
          break;
        }
      }
    }
    add_check(cert.checks, "matching edges pairwise at edge distance >= g-1", spaced);
  }
  {
    std::uint32_t worst = 0;
    for (const Edge& e : g.edges()) worst = std::max(worst, edge_distance(dist_g, e));
    add_check(cert.checks, "every edge within edge distance g-2 of V(M)",
              worst <= girth_value - 2, "max edge distance " + std::to_string(worst));
  }
  add_check(cert.checks, "d_T(x,V(M)) == d_G(x,V(M)) for all x",
            bfs_distances(tree, matched) == dist_g);
  bool in_tree = true;
  for (const Edge& e : edges) {
    const auto idx = tree.edge_index(e.u, e.v);
    in_tree &= idx.has_value();
    cert.matching_in_line.push_back(idx.value_or(0));
  }
  add_check(cert.checks, "M is contained in T", in_tree);
  Rational vertex_total;
  for (const auto& w : cert.vertex_weights) vertex_total += w;
  Rational edge_total;
  for (const auto& w : cert.edge_weights) edge_total += w;
  add_check(cert.checks, "sum of c equals n", vertex_total == n, to_fraction(vertex_total));
  add_check(cert.checks, "sum of c-bar over M equals n", edge_total == n,
            to_fraction(edge_total));

  cert.line = line_graph(tree);
  std::vector<Vertex> line_members(cert.matching_in_line.begin(),
                                   cert.matching_in_line.end());
  const InducedSubgraph power = induced_power(cert.line.graph, line_members, girth_value);
  const bool power_connected = in_tree && is_connected(power.graph);
  add_check(cert.checks, "L(T)^g[M] is connected", power_connected);

  // --- chain ---
  const auto profile_g = eccentricity_profile(g);
  const auto profile_t = eccentricity_profile(tree);
  Rational avec_c_t;
  for (std::size_t i = 0; i < matched.size(); ++i) {
    avec_c_t += cert.vertex_weights[i] * profile_t.ecc[matched[i]];
  }
  avec_c_t /= n;
  cert.chain["avecG"] = profile_g.avec;
  cert.chain["avecT"] = profile_t.avec;
  cert.chain["avecC_T"] = avec_c_t;
  add_step(cert.steps, "avec(G) <= avec(T)", profile_g.avec, Relation::LessEqual,
           profile_t.avec);
  add_step(cert.steps, "avec(T) <= avec_c(T) + (g-2)", profile_t.avec,
           Relation::LessEqual, avec_c_t + gg - 2);
  if (!power_connected) return cert;

  Rational avec_line = detail::weighted_ecc_sum(cert.line.graph, line_members,
                                                cert.edge_weights) / n;
  avec_line.canonicalize();
  std::vector<Vertex> local(edges.size());
  for (std::size_t i = 0; i < local.size(); ++i) local[i] = static_cast<Vertex>(i);
  Rational avec_power = detail::weighted_ecc_sum(power.graph, local, cert.edge_weights) / n;
  avec_power.canonicalize();
  cert.chain["avecCbar_L"] = avec_line;
  cert.chain["avecCbar_power"] = avec_power;
  add_step(cert.steps, "avec_c(T) <= avec_cbar(L) + 1", avec_c_t, Relation::LessEqual,
           avec_line + 1);
  add_step(cert.steps, "avec_cbar(L) <= g*avec_cbar(L^g[M]) + (g-1)", avec_line,
           Relation::LessEqual, gg * avec_power + gg - 1);

  const BoundResult theorem =
      use_max_degree ? bound_thm_girth_maxdeg(params) : bound_thm_girth(params);
  if (!theorem.applicable) {
    throw CertificationError("bound not applicable: " + theorem.reason);
  }
  cert.constants = theorem.constants;
  cert.chain["finalBound"] = *theorem.value;

  if (!use_max_degree) {
    const Rational& l = cert.constants.at("L");
    const Rational l1 = half_moore_order_even(params.min_degree, girth_value);
    add_check(cert.checks, "c(u) >= L/2 for all u in V(M)",
              std::all_of(cert.vertex_weights.begin(), cert.vertex_weights.end(),
                          [&](const Rational& w) { return w >= l1; }));
    add_check(cert.checks, "c-bar(e) >= L for all e in M",
              std::all_of(cert.edge_weights.begin(), cert.edge_weights.end(),
                          [&](const Rational& w) { return w >= l; }));
    for (const auto& w : cert.edge_weights) cert.normalized_edge_weights.push_back(w / l);
    Rational n_prime;
    for (const auto& w : cert.normalized_edge_weights) n_prime += w;
    const Integer path_order = ceil(n_prime);
    const Rational avec_prime =
        detail::weighted_ecc_sum(power.graph, local, cert.normalized_edge_weights) /
        n_prime;
    const Rational path_avec = path_avec_closed_form(path_order.get_ui());
    const Rational path_linear = Rational(3, 4) * Rational(path_order) - Rational(1, 2);
    cert.chain["Nprime"] = n_prime;
    cert.chain["avecCbarPrime_power"] = avec_prime;
    cert.chain["avecPath"] = path_avec;
    cert.chain["pathLinear"] = path_linear;
    add_step(cert.steps, "N' == n/L", n_prime, Relation::Equal, n / l);
    add_step(cert.steps, "avec_cbar(L^g[M]) == avec_cbar'(L^g[M])", avec_power,
             Relation::Equal, avec_prime);
    add_step(cert.steps, "avec_cbar'(L^g[M]) <= avec(P_ceil(N'))", avec_prime,
             Relation::LessEqual, path_avec);
    add_step(cert.steps, "avec(P_ceil(N')) <= 3ceil(N')/4 - 1/2", path_avec,
             Relation::LessEqual, path_linear);
    add_step(cert.steps, "g*(3ceil(N')/4 - 1/2) + 2(g-1) == bound",
             gg * path_linear + 2 * (gg - 1), Relation::Equal, *theorem.value);
    return cert;
  }

  // Maximum-degree refinement.  Non-hub edges are normalised by 2*L1 so every
  // normalised weight is at least 1.
  const Rational& l1 = cert.constants.at("L1");
  const Rational& l2 = cert.constants.at("L2");
  add_check(cert.checks, "c(hub) >= L2", weight_of(hub) >= l2);
  bool big_vertices = true;
  for (std::size_t i = 0; i < matched.size(); ++i) {
    if (matched[i] != hub) big_vertices &= cert.vertex_weights[i] >= l1;
  }
  add_check(cert.checks, "c(u) >= L1 for all u in V(M) other than the hub", big_vertices);
  bool big_edges = cert.edge_weights.front() >= l1 + l2;
  for (std::size_t i = 1; i < cert.edge_weights.size(); ++i) {
    big_edges &= cert.edge_weights[i] >= 2 * l1;
  }
  add_check(cert.checks, "c-bar(e1) >= L1+L2 and c-bar(e) >= 2L1 otherwise", big_edges);
  const Rational size_m = to_rational(edges.size());
  add_check(cert.checks, "|M| <= (n-L2+L1)/(2L1)", size_m <= (n - l2 + l1) / (2 * l1));

  cert.normalized_edge_weights.push_back((cert.edge_weights.front() - l2 + l1) / (2 * l1));
  for (std::size_t i = 1; i < cert.edge_weights.size(); ++i) {
    cert.normalized_edge_weights.push_back(cert.edge_weights[i] / (2 * l1));
  }
  Rational n_prime;
  for (const auto& w : cert.normalized_edge_weights) n_prime += w;
  const Rational y = (n - l2) / (2 * l1);
  const Integer path_order = ceil(n_prime);
  const Rational avec_prime =
      detail::weighted_ecc_sum(power.graph, local, cert.normalized_edge_weights) / n_prime;
  const Rational path_avec = path_avec_closed_form(path_order.get_ui());
  const Rational path_linear = Rational(3, 4) * Rational(path_order) - Rational(1, 2);
  const Rational hub_ecc = to_rational(eccentricity(power.graph, 0));
  const Rational refined = Rational(3, 4) * y * (1 + (l2 - l1) / (3 * n)) + Rational(5, 8);
  cert.chain["Nprime"] = n_prime;
  cert.chain["avecCbarPrime_power"] = avec_prime;
  cert.chain["avecPath"] = path_avec;
  cert.chain["pathLinear"] = path_linear;
  cert.chain["hubEcc"] = hub_ecc;
  cert.chain["hubEdgeWeight"] = cert.edge_weights.front();
  cert.chain["refinedPowerBound"] = refined;

  add_step(cert.steps, "N' == (n-L2)/(2L1) + 1/2", n_prime, Relation::Equal,
           y + Rational(1, 2));
  add_step(cert.steps,
           "avec_cbar(L^g[M]) == ((n-L2+L1)*avec_cbar'(L^g[M]) + (L2-L1)*e(e1))/n",
           avec_power, Relation::Equal,
           ((n - l2 + l1) * avec_prime + (l2 - l1) * hub_ecc) / n);
  add_step(cert.steps, "avec_cbar'(L^g[M]) <= avec(P_ceil(N'))", avec_prime,
           Relation::LessEqual, path_avec);
  add_step(cert.steps, "avec(P_ceil(N')) <= 3ceil(N')/4 - 1/2", path_avec,
           Relation::LessEqual, path_linear);
  add_step(cert.steps, "3ceil(N')/4 - 1/2 <= 3Y/4 + 5/8", path_linear,
           Relation::LessEqual, Rational(3, 4) * y + Rational(5, 8));
  add_step(cert.steps, "e(e1) <= |M| - 1", hub_ecc, Relation::LessEqual, size_m - 1);
  add_step(cert.steps, "|M| - 1 <= Y - 1/2", size_m - 1, Relation::LessEqual,
           y - Rational(1, 2));
  add_step(cert.steps, "avec_cbar(L^g[M]) <= (3Y/4)(1 + (L2-L1)/(3n)) + 5/8", avec_power,
           Relation::LessEqual, refined);
  add_step(cert.steps, "g*refined + 2(g-1) == bound", gg * refined + 2 * (gg - 1),
           Relation::Equal, *theorem.value);
  return cert;
}

nlohmann::ordered_json to_json(const MatchingCertificate& c) {
  nlohmann::ordered_json out;
  out["variant"] = "even";
  out["maxDegree"] = c.use_max_degree;
  out["girth"] = c.girth;
  out["boundId"] = std::string(to_string(c.bound_id));
  nlohmann::ordered_json m = nlohmann::ordered_json::array();
  for (const Edge& e : c.matching.edges) m.push_back({e.u, e.v});
  out["M"] = std::move(m);
  out["VM"] = c.matched_vertices;
  nlohmann::ordered_json links = nlohmann::ordered_json::array();
  for (const Edge& e : c.tree.connectors) links.push_back({e.u, e.v});
  out["connectors"] = std::move(links);
  out["connectorFallback"] = c.tree.used_fallback;
  out["treeEdges"] = to_json(c.tree.tree)["edges"];
  nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
  for (Vertex v = 0; v < c.tree.assignment.size(); ++v) {
    assignment[std::to_string(v)] = c.tree.assignment[v];
  }
  out["assignment"] = std::move(assignment);
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < c.matched_vertices.size(); ++i) {
    weights[std::to_string(c.matched_vertices[i])] = to_fraction(c.vertex_weights[i]);
  }
  out["weights"] = std::move(weights);
  nlohmann::ordered_json edge_weights = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.matching.edges.size(); ++i) {
    nlohmann::ordered_json row;
    row["edge"] = {c.matching.edges[i].u, c.matching.edges[i].v};
    row["lineVertex"] = i < c.matching_in_line.size() ? c.matching_in_line[i] : 0;
    row["weight"] = to_fraction(c.edge_weights[i]);
    if (i < c.normalized_edge_weights.size()) {
      row["normalized"] = to_fraction(c.normalized_edge_weights[i]);
    }
    edge_weights.push_back(std::move(row));
  }
  out["edgeWeights"] = std::move(edge_weights);
  out["constants"] = detail::rational_map_json(c.constants);
  out["chain"] = detail::rational_map_json(c.chain);
  out["steps"] = detail::steps_json(c.steps);
  out["checks"] = detail::checks_json(c.checks);
  out["allStepsHold"] = c.all_steps_hold();
  return out;
}

}  // namespace eccb
