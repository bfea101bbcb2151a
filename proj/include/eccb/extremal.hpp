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

#ifndef ECCB_EXTREMAL_HPP_
#define ECCB_EXTREMAL_HPP_

// Moore graphs and the chained extremal family built from them.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "eccb/graph.hpp"
#include "eccb/rational.hpp"

namespace eccb {

enum class MooreSource {
  Complete,
  CompleteBipartite,
  Petersen,
  HoffmanSingleton,
  Heawood,
  ProjectivePlaneIncidence,
  Cycle,
};

std::string_view to_string(MooreSource s);

struct MooreSpec {
  std::uint32_t delta = 0;
  std::uint32_t g = 0;
  std::uint64_t order = 0;     // K for odd g, L for even g
  std::uint32_t diameter = 0;  // (g-1)/2 or g/2
  MooreSource source = MooreSource::Complete;
  std::uint32_t q = 0;  // field order, ProjectivePlaneIncidence only
};

class NotInCatalogError : public std::invalid_argument {
 public:
  NotInCatalogError(std::uint32_t delta, std::uint32_t g);
};

// Integer Moore order for any delta >= 2, g >= 3.
std::uint64_t moore_order(std::uint32_t delta, std::uint32_t g);

std::optional<MooreSpec> moore_spec(std::uint32_t delta, std::uint32_t g);

// The catalogued Moore graph, verified (regular, girth, order) before it is
// returned.  nullopt when (delta, g) is not in the catalog.
std::optional<Graph> moore_catalog(std::uint32_t delta, std::uint32_t g);

struct ChainSpec {
  std::uint32_t delta = 0;
  std::uint32_t g = 0;
  std::uint32_t k = 1;
  // Edge (a, b) of the base Moore graph used in every copy; defaults to the
  // lexicographically least edge.  a is the endpoint that receives the
  // incoming link, b the one that sends the outgoing link.
  std::optional<Edge> base_edge;
  // Filled by make_chain_spec, in global labels (copy i occupies
  // [i*order, (i+1)*order)).
  std::vector<Edge> link_edges;     // a_{i+1} b_i, i = 1..k-1
  std::vector<Edge> deleted_edges;  // a_i b_i, i = 2..k-1
};

// Throws NotInCatalogError, or std::invalid_argument for k == 0 or a
// base_edge that is not an edge of the Moore graph.
ChainSpec make_chain_spec(std::uint32_t delta, std::uint32_t g, std::uint32_t k,
                          std::optional<Edge> base_edge = std::nullopt);

Graph chain_graph(const ChainSpec& spec);

struct SharpnessRow {
  std::uint32_t k = 0;
  std::uint64_t n = 0;
  Rational avec;
  Rational lower;
  std::optional<Rational> upper;  // absent when the theorem does not apply
  std::optional<Rational> gap;
  std::uint32_t diameter = 0;
  std::uint32_t radius = 0;
  // gap within the claimed additive constant; always true for k == 1.
  bool gap_ok = true;
};

// Claimed additive constant between chain avec and the theorem bound:
// 5(g-1)/2 for odd g, 5(g-1)/2 - 1 for even g.
Rational sharpness_gap_limit(std::uint32_t g);

std::vector<SharpnessRow> sharpness_report(std::uint32_t delta, std::uint32_t g,
                                           std::uint32_t k_min, std::uint32_t k_max);

// Header plus one line per row:
// k,n,avec,avec_exact,lower,lower_exact,upper,upper_exact,gap,gap_exact,diameter,radius
void write_sharpness_csv(std::ostream& out, const std::vector<SharpnessRow>& rows);

}  // namespace eccb

#endif  // ECCB_EXTREMAL_HPP_
