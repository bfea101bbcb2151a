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

#ifndef ECCB_CERTIFIER_HPP_
#define ECCB_CERTIFIER_HPP_

// Constructive bound certificates.
//
// The odd-girth certificate grows a maximal (g-1)-packing A, takes a spanning
// tree T that keeps every vertex's distance to A, moves each vertex's unit
// weight onto its nearest member of A, and walks the chain
//
//   avec(G) <= avec(T) <= avec_c(T) + (g-1)
//           <= g * avec_c(T^g[A]) + 2(g-1)
//           <= g * (3 ceil(N')/4 - 1/2) + 2(g-1).
//
// The even-girth certificate does the same with a spaced matching M, moving
// weight onto V(M) and then onto the matching edges of the line graph L(T).
//
// Nothing in the chain is assumed: every value is computed exactly on the
// concrete graph and every inequality is checked.  A failed step is recorded,
// never hidden.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccb/bounds.hpp"
#include "eccb/graph.hpp"
#include "eccb/rational.hpp"

namespace eccb {

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Relation { LessEqual, Equal };

struct ChainStep {
  std::string name;
  Rational lhs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
  bool holds = false;
};

struct StructuralCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

// --- packings (odd girth) ---------------------------------------------------

struct Packing {
  // a_1 first, in insertion order.
  std::vector<Vertex> members;
  // links[i] is the middle edge of the length-`spacing` path that discovered
  // members[i + 1].  Empty for packings supplied from outside.
  std::vector<Edge> links;
};

// Greedy maximal packing: starts at `start` and keeps adding the lowest-id
// vertex at distance exactly `spacing` from the current set while some
// vertex is at distance >= spacing.  Members end up pairwise >= spacing apart
// and every vertex lies within spacing-1 of the set.
Packing build_packing(const Graph& g, std::uint32_t spacing, Vertex start = 0);

struct SpanningTree {
  Graph tree;
  // parent[r] == r for the roots of the underlying BFS forest.
  std::vector<Vertex> parent;
  // Nearest root in the tree, lowest id on ties.
  std::vector<Vertex> assignment;
  // Edges joining distinct cells, in the order they were added.
  std::vector<Edge> connectors;
  bool used_fallback = false;
};

// Multi-source BFS forest from the packing (ties to the lowest-id root, then
// the lowest-id parent) plus |A|-1 connector edges.  The recorded discovery
// links are used when they join distinct cells into a tree; otherwise the
// cheapest cross-cell edges of G are used.  Distance to the packing is
// verified afterwards; a mismatch throws CertificationError.
SpanningTree build_spanning_tree_from_packing(const Graph& g, const Packing& packing);

// c(u) = number of vertices assigned to u, for u in `targets`.
std::vector<Rational> cell_weights(const std::vector<Vertex>& assignment,
                                   const std::vector<Vertex>& targets);

struct PackingCertificate {
  bool use_max_degree = false;
  std::uint32_t girth = 0;
  BoundId bound_id = BoundId::ThmGirthOdd;
  Packing packing;
  SpanningTree tree;
  std::vector<Rational> weights;             // c on packing.members
  std::vector<Rational> normalized_weights;  // c'
  std::map<std::string, Rational> constants;
  // Named exact values along the chain (avecG, avecT, avecC_T, ...).
  std::map<std::string, Rational> chain;
  std::vector<ChainStep> steps;
  std::vector<StructuralCheck> checks;

  bool all_steps_hold() const;
};

// Requires a connected graph with minimum degree >= 3 and odd girth; throws
// CertificationError otherwise.  With use_max_degree the packing starts at
// the lowest-id vertex of maximum degree and the chain targets the
// maximum-degree refinement.
PackingCertificate certify_odd(const Graph& g, bool use_max_degree = false);

// --- spaced matchings (even girth) -----------------------------------------

struct SpacedMatching {
  std::vector<Edge> edges;
  // links[i] is the middle edge of the path that discovered edges[i + 1].
  std::vector<Edge> links;
};

// min over endpoint pairs of the vertex distance, computed from distances to
// one edge's endpoints.
std::uint32_t edge_distance(const std::vector<Distance>& dist_to_set, const Edge& e);

// Greedy maximal spaced matching.  Starts with `start` (default: the
// lexicographically least edge) and keeps adding the least edge at edge
// distance exactly spacing-1 from V(M) while some edge is at edge distance
// >= spacing-1.
SpacedMatching build_spaced_matching(const Graph& g, std::uint32_t spacing,
                                     std::optional<Edge> start = std::nullopt);

// BFS forest from V(M), plus the matching edges, plus |M|-1 connectors.
SpanningTree build_spanning_tree_from_matching(const Graph& g,
                                               const SpacedMatching& matching);

struct MatchingCertificate {
  bool use_max_degree = false;
  std::uint32_t girth = 0;
  BoundId bound_id = BoundId::ThmGirthEven;
  SpacedMatching matching;
  std::vector<Vertex> matched_vertices;  // V(M), sorted
  SpanningTree tree;
  std::vector<Rational> vertex_weights;  // c on matched_vertices
  LineGraph line;                        // L(T)
  std::vector<std::size_t> matching_in_line;  // vertex of L(T) for each M edge
  std::vector<Rational> edge_weights;         // c-bar on matching.edges
  std::vector<Rational> normalized_edge_weights;
  std::map<std::string, Rational> constants;
  std::map<std::string, Rational> chain;
  std::vector<ChainStep> steps;
  std::vector<StructuralCheck> checks;

  bool all_steps_hold() const;
};

MatchingCertificate certify_even(const Graph& g, bool use_max_degree = false);

nlohmann::ordered_json to_json(const PackingCertificate& c);
nlohmann::ordered_json to_json(const MatchingCertificate& c);

}  // namespace eccb

#endif  // ECCB_CERTIFIER_HPP_
