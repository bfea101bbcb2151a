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

#ifndef ECCB_SRC_CERTIFIER_INTERNAL_HPP_
#define ECCB_SRC_CERTIFIER_INTERNAL_HPP_

#include <span>
#include <string>
#include <vector>

#include "eccb/certifier.hpp"

namespace eccb::detail {

// Multi-source BFS forest.  root[x] is the lowest-id source among those
// closest to x; parent[x] is the lowest-id neighbour one level up that leads
// to root[x].
struct Forest {
  std::vector<Distance> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> root;
};

Forest bfs_forest(const Graph& g, std::span<const Vertex> sources);

// Path from x up to its root: path[0] is the root, path.back() is x.
std::vector<Vertex> path_to_root(const Forest& f, Vertex x);

// Forest edges + `fixed` edges give one component per cell; the links (or,
// failing that, the cheapest cross-cell edges of g) join the cells into a
// spanning tree.  cell_of_vertex maps every vertex to its cell.
SpanningTree join_cells(const Graph& g, const Forest& forest,
                        const std::vector<std::size_t>& cell_of_vertex,
                        std::size_t cell_count, std::span<const Edge> fixed,
                        std::span<const Edge> links, std::span<const Vertex> sources);

// sum_i weights[i] * ecc_g(vertices[i]).  Throws DisconnectedGraphError.
Rational weighted_ecc_sum(const Graph& g, std::span<const Vertex> vertices,
                          std::span<const Rational> weights);

Rational to_rational(std::uint64_t v);

void add_step(std::vector<ChainStep>& steps, std::string name, const Rational& lhs,
              Relation relation, const Rational& rhs);

void add_check(std::vector<StructuralCheck>& checks, std::string name, bool holds,
               std::string detail = {});

bool is_spanning_tree(const Graph& g, const Graph& tree);

nlohmann::ordered_json steps_json(const std::vector<ChainStep>& steps);
nlohmann::ordered_json checks_json(const std::vector<StructuralCheck>& checks);
nlohmann::ordered_json rational_map_json(const std::map<std::string, Rational>& m);

}  // namespace eccb::detail

#endif  // ECCB_SRC_CERTIFIER_INTERNAL_HPP_
