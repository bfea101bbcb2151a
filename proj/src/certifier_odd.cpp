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

#include "certifier_internal.hpp"

namespace eccb {

using detail::add_check;
using detail::add_step;
using detail::to_rational;

Packing build_packing(const Graph& g, std::uint32_t spacing, Vertex start) {
  if (spacing < 2) throw std::domain_error("packing spacing must be at least 2");
  if (start >= g.order()) throw std::out_of_range("packing start vertex out of range");
  Packing out;
  out.members.push_back(start);
  while (true) {
    const detail::Forest f = detail::bfs_forest(g, out.members);
    Distance far = 0;
    for (Distance d : f.dist) {
      if (d == kUnreachable) throw DisconnectedGraphError();
      far = std::max(far, d);
    }
    if (far < static_cast<Distance>(spacing)) break;
    // Some vertex at distance exactly `spacing` lies on every shortest path
    // out to a farther one.
    Vertex next = 0;
    while (f.dist[next] != static_cast<Distance>(spacing)) ++next;
    const auto path = detail::path_to_root(f, next);
    const std::size_t mid = (spacing - 1) / 2;
    out.links.emplace_back(path[mid], path[mid + 1]);
    out.members.push_back(next);
  }
  return out;
}

SpanningTree build_spanning_tree_from_packing(const Graph& g, const Packing& packing) {
  if (packing.members.empty()) throw std::domain_error("empty packing");
  const detail::Forest f = detail::bfs_forest(g, packing.members);
  std::vector<std::size_t> index(g.order(), 0);
  for (std::size_t i = 0; i < packing.members.size(); ++i) index[packing.members[i]] = i;
  std::vector<std::size_t> cell(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    if (f.dist[x] == kUnreachable) throw DisconnectedGraphError();
    cell[x] = index[f.root[x]];
  }
  return detail::join_cells(g, f, cell, packing.members.size(), {}, packing.links,
                            packing.members);
}

bool PackingCertificate::all_steps_hold() const {
  return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.holds; }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

namespace {

Vertex first_vertex_of_max_degree(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

}  // namespace

PackingCertificate certify_odd(const Graph& g, bool use_max_degree) {
  if (g.order() == 0 || !is_connected(g)) {
    throw CertificationError("graph is disconnected");
  }
  const GraphParams params = measure(g);
  if (params.min_degree < 3) {
    throw CertificationError("not certifiable: requires minimum degree delta >= 3");
  }
  if (!params.girth || *params.girth % 2 == 0) {
    throw CertificationError("girth is even; use the even (matching) certificate");
  }
  const std::uint32_t girth_value = *params.girth;
  const Rational gg = to_rational(girth_value);
  const Rational n = to_rational(g.order());

  PackingCertificate cert;
  cert.use_max_degree = use_max_degree;
  cert.girth = girth_value;
  cert.bound_id = use_max_degree ? BoundId::ThmGirthMaxDegOdd : BoundId::ThmGirthOdd;

  const Vertex hub = use_max_degree ? first_vertex_of_max_degree(g) : Vertex{0};
  cert.packing = build_packing(g, girth_value, hub);
  cert.tree = build_spanning_tree_from_packing(g, cert.packing);
  const auto& members = cert.packing.members;
  const Graph& tree = cert.tree.tree;
  cert.weights = cell_weights(cert.tree.assignment, members);

  // --- structure ---
  const auto dist_g = bfs_distances(g, members);
  add_check(cert.checks, "tree is a spanning tree of G", detail::is_spanning_tree(g, tree));
  {
    bool spaced = true;
    for (std::size_t i = 0; i < members.size() && spaced; ++i) {
      const auto d = bfs_distances(g, members[i]);
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (d[members[j]] < static_cast<Distance>(girth_value)) {
          spaced = false;
          break;
        }
      }
    }
    add_check(cert.checks, "packing members pairwise at distance >= g", spaced);
  }
  const Distance cover = *std::max_element(dist_g.begin(), dist_g.end());
  add_check(cert.checks, "every vertex within g-1 of A",
            cover <= static_cast<Distance>(girth_value) - 1,
            "max distance " + std::to_string(cover));
  add_check(cert.checks, "d_T(x,A) == d_G(x,A) for all x",
            bfs_distances(tree, members) == dist_g);
  Rational total;
  for (const auto& w : cert.weights) total += w;
  add_check(cert.checks, "sum of c equals n", total == n, to_fraction(total));

  const InducedSubgraph power = induced_power(tree, members, girth_value);
  const bool power_connected = is_connected(power.graph);
  add_check(cert.checks, "T^g[A] is connected", power_connected);

  if (use_max_degree) {
    add_check(cert.checks, "deg_T(hub) == Delta", tree.degree(hub) == g.max_degree());
  }

  // --- chain ---
  const auto profile_g = eccentricity_profile(g);
  const auto profile_t = eccentricity_profile(tree);
  Rational avec_c_t;
  for (std::size_t i = 0; i < members.size(); ++i) {
    avec_c_t += cert.weights[i] * profile_t.ecc[members[i]];
  }
  avec_c_t /= n;
  cert.chain["avecG"] = profile_g.avec;
  cert.chain["avecT"] = profile_t.avec;
  cert.chain["avecC_T"] = avec_c_t;

  add_step(cert.steps, "avec(G) <= avec(T)", profile_g.avec, Relation::LessEqual,
           profile_t.avec);
  add_step(cert.steps, "avec(T) <= avec_c(T) + (g-1)", profile_t.avec,
           Relation::LessEqual, avec_c_t + gg - 1);
  if (!power_connected) return cert;

  std::vector<Vertex> local(members.size());
  for (std::size_t i = 0; i < local.size(); ++i) local[i] = static_cast<Vertex>(i);
  Rational avec_c_power = detail::weighted_ecc_sum(power.graph, local, cert.weights) / n;
  avec_c_power.canonicalize();
  cert.chain["avecC_power"] = avec_c_power;
  add_step(cert.steps, "avec_c(T) <= g*avec_c(T^g[A]) + (g-1)", avec_c_t,
           Relation::LessEqual, gg * avec_c_power + gg - 1);

  const BoundResult theorem =
      use_max_degree ? bound_thm_girth_maxdeg(params) : bound_thm_girth(params);
  if (!theorem.applicable) {
    throw CertificationError("bound not applicable: " + theorem.reason);
  }
  cert.constants = theorem.constants;
  cert.chain["finalBound"] = *theorem.value;

  if (!use_max_degree) {
    const Rational& k = cert.constants.at("K");
    for (const auto& w : cert.weights) {
      cert.normalized_weights.push_back(w / k);
    }
    bool big_cells = std::all_of(cert.weights.begin(), cert.weights.end(),
                                 [&](const Rational& w) { return w >= k; });
    add_check(cert.checks, "c(u) >= K for all u in A", big_cells);

    Rational n_prime;
    for (const auto& w : cert.normalized_weights) n_prime += w;
    const Integer path_order = ceil(n_prime);
    const Rational avec_prime =
        detail::weighted_ecc_sum(power.graph, local, cert.normalized_weights) / n_prime;
    const Rational path_avec = path_avec_closed_form(path_order.get_ui());
    const Rational path_linear = Rational(3, 4) * Rational(path_order) - Rational(1, 2);
    cert.chain["Nprime"] = n_prime;
    cert.chain["avecCprime_power"] = avec_prime;
    cert.chain["avecPath"] = path_avec;
    cert.chain["pathLinear"] = path_linear;

    add_step(cert.steps, "N' == n/K", n_prime, Relation::Equal, n / k);
    add_step(cert.steps, "avec_c(T^g[A]) == avec_c'(T^g[A])", avec_c_power,
             Relation::Equal, avec_prime);
    add_step(cert.steps, "avec_c'(T^g[A]) <= avec(P_ceil(N'))", avec_prime,
             Relation::LessEqual, path_avec);
    add_step(cert.steps, "avec(P_ceil(N')) <= 3ceil(N')/4 - 1/2", path_avec,
             Relation::LessEqual, path_linear);
    add_step(cert.steps, "g*(3ceil(N')/4 - 1/2) + 2(g-1) == bound",
             gg * path_linear + 2 * (gg - 1), Relation::Equal, *theorem.value);
    return cert;
  }

  // Maximum-degree refinement: the hub cell carries at least K2, every
  // other cell at least K1.
  const Rational& k1 = cert.constants.at("K1");
  const Rational& k2 = cert.constants.at("K2");
  bool big_cells = cert.weights.front() >= k2;
  for (std::size_t i = 1; i < cert.weights.size(); ++i) big_cells &= cert.weights[i] >= k1;
  add_check(cert.checks, "c(hub) >= K2 and c(u) >= K1 otherwise", big_cells);
  const Rational size_a = to_rational(members.size());
  const Rational x = (n - k2) / k1;
  add_check(cert.checks, "|A| <= (n-K2)/K1 + 1", size_a <= x + 1);

  cert.normalized_weights.push_back((cert.weights.front() - k2 + k1) / k1);
  for (std::size_t i = 1; i < cert.weights.size(); ++i) {
    cert.normalized_weights.push_back(cert.weights[i] / k1);
  }
  Rational n_prime;
  for (const auto& w : cert.normalized_weights) n_prime += w;
  const Integer path_order = ceil(n_prime);
  const Rational avec_prime =
      detail::weighted_ecc_sum(power.graph, local, cert.normalized_weights) / n_prime;
  const Rational path_avec = path_avec_closed_form(path_order.get_ui());
  const Rational path_linear = Rational(3, 4) * Rational(path_order) - Rational(1, 2);
  const Rational hub_ecc = to_rational(eccentricity(power.graph, 0));
  const Rational refined =
      Rational(3, 4) * x * (1 + (k2 - k1) / (3 * n)) + 1;
  cert.chain["Nprime"] = n_prime;
  cert.chain["avecCprime_power"] = avec_prime;
  cert.chain["avecPath"] = path_avec;
  cert.chain["pathLinear"] = path_linear;
  cert.chain["hubEcc"] = hub_ecc;
  cert.chain["hubWeight"] = cert.weights.front();
  cert.chain["refinedPowerBound"] = refined;

  add_step(cert.steps, "N' == (n-K2)/K1 + 1", n_prime, Relation::Equal, x + 1);
  add_step(cert.steps,
           "avec_c(T^g[A]) == ((n-K2+K1)*avec_c'(T^g[A]) + (K2-K1)*e(hub))/n",
           avec_c_power, Relation::Equal,
           ((n - k2 + k1) * avec_prime + (k2 - k1) * hub_ecc) / n);
  add_step(cert.steps, "avec_c'(T^g[A]) <= avec(P_ceil(N'))", avec_prime,
           Relation::LessEqual, path_avec);
  add_step(cert.steps, "avec(P_ceil(N')) <= 3ceil(N')/4 - 1/2", path_avec,
           Relation::LessEqual, path_linear);
  add_step(cert.steps, "3ceil(N')/4 - 1/2 <= 3X/4 + 1", path_linear, Relation::LessEqual,
           Rational(3, 4) * x + 1);
  add_step(cert.steps, "e(hub) <= |A| - 1", hub_ecc, Relation::LessEqual, size_a - 1);
  add_step(cert.steps, "|A| - 1 <= X", size_a - 1, Relation::LessEqual, x);
  add_step(cert.steps, "avec_c(T^g[A]) <= (3X/4)(1 + (K2-K1)/(3n)) + 1", avec_c_power,
           Relation::LessEqual, refined);
  add_step(cert.steps, "g*refined + 2(g-1) == bound", gg * refined + 2 * (gg - 1),
           Relation::Equal, *theorem.value);
  return cert;
}

nlohmann::ordered_json to_json(const PackingCertificate& c) {
  nlohmann::ordered_json out;
  out["variant"] = "odd";
  out["maxDegree"] = c.use_max_degree;
  out["girth"] = c.girth;
  out["boundId"] = std::string(to_string(c.bound_id));
  out["A"] = c.packing.members;
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
  nlohmann::ordered_json normalized = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < c.packing.members.size(); ++i) {
    const std::string key = std::to_string(c.packing.members[i]);
    weights[key] = to_fraction(c.weights[i]);
    if (i < c.normalized_weights.size()) {
      normalized[key] = to_fraction(c.normalized_weights[i]);
    }
  }
  out["weights"] = std::move(weights);
  out["normalizedWeights"] = std::move(normalized);
  out["constants"] = detail::rational_map_json(c.constants);
  out["chain"] = detail::rational_map_json(c.chain);
  out["steps"] = detail::steps_json(c.steps);
  out["checks"] = detail::checks_json(c.checks);
  out["allStepsHold"] = c.all_steps_hold();
  return out;
}

}  // namespace eccb
