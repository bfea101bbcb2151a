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

#include "eccb/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "eccb/bounds.hpp"
#include "eccb/generators.hpp"

namespace eccb {

std::string_view to_string(MooreSource s) {
  switch (s) {
    case MooreSource::Complete: return "Complete";
    case MooreSource::CompleteBipartite: return "CompleteBipartite";
    case MooreSource::Petersen: return "Petersen";
    case MooreSource::HoffmanSingleton: return "HoffmanSingleton";
    case MooreSource::Heawood: return "Heawood";
    case MooreSource::ProjectivePlaneIncidence: return "ProjectivePlaneIncidence";
    case MooreSource::Cycle: return "Cycle";
  }
  return "?";
}

NotInCatalogError::NotInCatalogError(std::uint32_t delta, std::uint32_t g)
    : std::invalid_argument("no Moore graph in catalog for delta=" + std::to_string(delta) +
                            " g=" + std::to_string(g)) {}

std::uint64_t moore_order(std::uint32_t delta, std::uint32_t g) {
  if (delta < 2 || g < 3) throw std::domain_error("Moore order needs delta >= 2 and g >= 3");
  const std::uint32_t d = g % 2 == 1 ? (g - 1) / 2 : g / 2;
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    sum += term;
    term *= delta - 1;
  }
  return g % 2 == 1 ? 1 + delta * sum : 2 * sum;
}

std::optional<MooreSpec> moore_spec(std::uint32_t delta, std::uint32_t g) {
  if (delta < 2 || g < 3) return std::nullopt;
  MooreSpec s;
  s.delta = delta;
  s.g = g;
  s.order = moore_order(delta, g);
  s.diameter = g % 2 == 1 ? (g - 1) / 2 : g / 2;
  if (g == 3) {
    s.source = MooreSource::Complete;
  } else if (g == 4) {
    s.source = MooreSource::CompleteBipartite;
  } else if (delta == 2) {
    s.source = MooreSource::Cycle;
  } else if (g == 5 && delta == 3) {
    s.source = MooreSource::Petersen;
  } else if (g == 5 && delta == 7) {
    s.source = MooreSource::HoffmanSingleton;
  } else if (g == 6 && delta == 3) {
    s.source = MooreSource::Heawood;
  } else if (g == 6 && is_supported_prime_power(delta - 1)) {
    s.source = MooreSource::ProjectivePlaneIncidence;
    s.q = delta - 1;
  } else {
    return std::nullopt;
  }
  return s;
}

namespace {

Graph build(const MooreSpec& s) {
  switch (s.source) {
    case MooreSource::Complete: return complete_graph(s.delta + 1);
    case MooreSource::CompleteBipartite: return complete_bipartite(s.delta, s.delta);
    case MooreSource::Petersen: return petersen();
    case MooreSource::HoffmanSingleton: return hoffman_singleton();
    case MooreSource::Heawood: return heawood();
    case MooreSource::ProjectivePlaneIncidence: return projective_plane_incidence(s.q);
    case MooreSource::Cycle: return cycle_graph(s.g);
  }
  throw std::logic_error("unknown Moore source");
}

}  // namespace

std::optional<Graph> moore_catalog(std::uint32_t delta, std::uint32_t g) {
  const auto spec = moore_spec(delta, g);
  if (!spec) return std::nullopt;
  Graph graph = build(*spec);
  const bool ok = graph.order() == spec->order && graph.min_degree() == delta &&
                  graph.max_degree() == delta && girth(graph) == g;
  if (!ok) {
    throw std::logic_error("catalog graph for " + std::string(to_string(spec->source)) +
                           " failed verification");
  }
  return graph;
}

ChainSpec make_chain_spec(std::uint32_t delta, std::uint32_t g, std::uint32_t k,
                          std::optional<Edge> base_edge) {
  if (k == 0) throw std::invalid_argument("chain needs k >= 1");
  const auto base = moore_catalog(delta, g);
  if (!base) throw NotInCatalogError(delta, g);
  const Edge e = base_edge.value_or(base->edges().front());
  if (!base->has_edge(e.u, e.v)) {
    throw std::invalid_argument("base edge is not an edge of the Moore graph");
  }
  ChainSpec spec;
  spec.delta = delta;
  spec.g = g;
  spec.k = k;
  spec.base_edge = e;
  const auto order = static_cast<Vertex>(base->order());
  const Vertex a = e.u;
  const Vertex b = e.v;
  for (std::uint32_t i = 0; i + 1 < k; ++i) {
    spec.link_edges.emplace_back((i + 1) * order + a, i * order + b);
  }
  for (std::uint32_t i = 1; i + 1 < k; ++i) {
    spec.deleted_edges.emplace_back(i * order + a, i * order + b);
  }
  return spec;
}

Graph chain_graph(const ChainSpec& spec) {
  const auto base = moore_catalog(spec.delta, spec.g);
  if (!base) throw NotInCatalogError(spec.delta, spec.g);
  if (spec.k == 0) throw std::invalid_argument("chain needs k >= 1");
  const auto order = static_cast<Vertex>(base->order());
  std::vector<Edge> deleted = spec.deleted_edges;
  std::sort(deleted.begin(), deleted.end());
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    for (const Edge& e : base->edges()) {
      const Edge shifted(i * order + e.u, i * order + e.v);
      if (!std::binary_search(deleted.begin(), deleted.end(), shifted)) {
        edges.push_back(shifted);
      }
    }
  }
  edges.insert(edges.end(), spec.link_edges.begin(), spec.link_edges.end());
  return Graph::from_edges(static_cast<std::size_t>(spec.k) * order, edges);
}

Rational sharpness_gap_limit(std::uint32_t g) {
  Rational limit = make_rational(5 * (static_cast<std::int64_t>(g) - 1), 2);
  if (g % 2 == 0) limit -= 1;
  return limit;
}

std::vector<SharpnessRow> sharpness_report(std::uint32_t delta, std::uint32_t g,
                                           std::uint32_t k_min, std::uint32_t k_max) {
  if (k_min == 0 || k_min > k_max) throw std::invalid_argument("invalid k range");
  std::vector<SharpnessRow> rows;
  for (std::uint32_t k = k_min; k <= k_max; ++k) {
    const Graph graph = chain_graph(make_chain_spec(delta, g, k));
    const EccentricityProfile profile = eccentricity_profile(graph);
    GraphParams params;
    params.n = graph.order();
    params.min_degree = delta;
    params.max_degree = delta;
    params.girth = g;
    SharpnessRow row;
    row.k = k;
    row.n = graph.order();
    row.avec = profile.avec;
    row.lower = lower_bound_chain(params, k);
    row.diameter = profile.diameter;
    row.radius = profile.radius;
    const BoundResult upper = bound_thm_girth(params);
    if (upper.applicable) {
      row.upper = *upper.value;
      row.gap = *row.upper - row.avec;
      if (k >= 2) row.gap_ok = *row.gap <= sharpness_gap_limit(g);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sharpness_csv(std::ostream& out, const std::vector<SharpnessRow>& rows) {
  out << "k,n,avec,avec_exact,lower,lower_exact,upper,upper_exact,gap,gap_exact,diameter,"
         "radius\n";
  auto pair = [&](const std::optional<Rational>& q) {
    if (q) {
      out << to_decimal(*q) << ',' << to_fraction(*q);
    } else {
      out << ',';
    }
  };
  for (const auto& r : rows) {
    out << r.k << ',' << r.n << ',';
    pair(r.avec);
    out << ',';
    pair(r.lower);
    out << ',';
    pair(r.upper);
    out << ',';
    pair(r.gap);
    out << ',' << r.diameter << ',' << r.radius << '\n';
  }
}

}  // namespace eccb
