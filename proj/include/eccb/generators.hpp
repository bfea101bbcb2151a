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

#ifndef ECCB_GENERATORS_HPP_
#define ECCB_GENERATORS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "eccb/graph.hpp"

namespace eccb {

// Named fixtures.  Labelings are canonical and stable across releases.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
// Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order, adjacent
// when disjoint.
Graph petersen();
// LCF [5,-5]^7.
Graph heawood();
// Robertson's pentagon/pentagram construction, 50 vertices.
Graph hoffman_singleton();
// Point/line incidence graph of PG(2,q) for a prime power q <= 8.  Points are
// 0..q^2+q, lines follow.
Graph projective_plane_incidence(std::uint32_t q);

bool is_supported_prime_power(std::uint32_t q);

// "path:5", "cycle:6", "complete:4", "bipartite:3,3", "petersen", "heawood",
// "hoffman-singleton", "pg:3".  Throws std::invalid_argument otherwise.
Graph named(std::string_view spec);

struct GeneratorConfig {
  std::uint32_t n = 0;
  std::uint32_t delta = 3;
  std::uint32_t girth = 3;
  std::uint64_t seed = 0;
  std::uint32_t max_restarts = 50;
  // 0 means 50 * n.
  std::uint32_t max_edge_attempts_per_restart = 0;
  // Vertices stop accepting edges at degree delta + degree_slack.
  std::uint32_t degree_slack = 2;
};

struct GeneratorFailure {
  std::uint32_t restarts = 0;
  std::uint64_t attempts = 0;
  std::uint64_t rejected = 0;
  std::string reason;
};

using GeneratorResult = std::variant<Graph, GeneratorFailure>;

// Grows a random graph by adding edges between vertices at distance >= g-1,
// so no cycle shorter than g ever appears, until every degree is >= delta;
// then links components.  The output is re-measured before it is returned.
GeneratorResult random_min_degree_girth(const GeneratorConfig& cfg);

// Edge list plus the trailing "# seed=... delta=... g=..." provenance line.
void write_generated(std::ostream& out, const Graph& g, const GeneratorConfig& cfg);

}  // namespace eccb

#endif  // ECCB_GENERATORS_HPP_
