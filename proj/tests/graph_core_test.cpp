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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "eccb/generators.hpp"
#include "eccb/graph.hpp"
#include "oracles.hpp"

namespace eccb {
namespace {

TEST(EdgeListTest, ParsesCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# triangle\n\n3 3\n0 1\n  # inner\n1 2\n2 0\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(EdgeListTest, RoundTripsThroughWriter) {
  const Graph g = petersen();
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(parse_edge_list(out.str()), g);
}

TEST(EdgeListTest, ReportsLineOfMalformedEdge) {
  try {
    parse_edge_list("3 2\n0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(EdgeListTest, RejectsBadInput) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);         // too few edges
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);    // too many
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);         // out of range
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);         // self-loop
  EXPECT_THROW(parse_edge_list("3 1\n-1 2\n"), ParseError);
}

TEST(GraphTest, FromEdgesMergesDuplicates) {
  const std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}};
  const Graph g = Graph::from_edges(3, edges);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.edge_index(2, 1), std::optional<std::size_t>(1));
}

TEST(ProfileTest, PathOfFive) {
  const auto p = eccentricity_profile(path_graph(5));
  EXPECT_EQ(p.ecc, (std::vector<std::uint32_t>{4, 3, 2, 3, 4}));
  EXPECT_EQ(p.avec, Rational(16, 5));
  EXPECT_EQ(p.radius, 2u);
  EXPECT_EQ(p.diameter, 4u);
}

TEST(ProfileTest, SingleVertex) {
  const auto p = eccentricity_profile(path_graph(1));
  EXPECT_EQ(p.avec, 0);
}

TEST(ProfileTest, DisconnectedGraphThrows) {
  const Graph g = parse_edge_list("4 2\n0 1\n2 3\n");
  EXPECT_FALSE(is_connected(g));
  EXPECT_THROW(eccentricity_profile(g), DisconnectedGraphError);
}

TEST(ProfileTest, MatchesFloydWarshallOnNamedGraphs) {
  for (const char* name : {"petersen", "heawood", "bipartite:2,5", "cycle:9", "complete:6",
                           "hoffman-singleton", "pg:3"}) {
    const Graph g = named(name);
    const auto expected = oracle::profile(g);
    const auto got = eccentricity_profile(g);
    EXPECT_EQ(got.ecc, expected.ecc) << name;
    EXPECT_EQ(got.avec, expected.avec) << name;
    EXPECT_EQ(got.radius, expected.radius) << name;
    EXPECT_EQ(got.diameter, expected.diameter) << name;
  }
}

TEST(ProfileTest, MatchesFloydWarshallOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected(2 + trial % 25, 0.08, rng);
    const auto expected = oracle::profile(g);
    const auto got = eccentricity_profile(g);
    ASSERT_EQ(got.ecc, expected.ecc);
    ASSERT_EQ(got.avec, expected.avec);
  }
}

TEST(ProfileTest, RadiusDiameterSandwich) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = eccentricity_profile(oracle::random_connected(3 + trial, 0.05, rng));
    EXPECT_LE(p.radius, p.diameter);
    EXPECT_LE(p.diameter, 2 * p.radius);
    EXPECT_LE(Rational(p.radius), p.avec);
    EXPECT_LE(p.avec, Rational(p.diameter));
  }
}

TEST(GirthTest, KnownValues) {
  EXPECT_EQ(girth(petersen()), 5u);
  EXPECT_EQ(girth(heawood()), 6u);
  EXPECT_EQ(girth(complete_graph(4)), 3u);
  EXPECT_EQ(girth(complete_bipartite(3, 3)), 4u);
  EXPECT_EQ(girth(cycle_graph(11)), 11u);
  EXPECT_EQ(girth(hoffman_singleton()), 5u);
  EXPECT_FALSE(girth(path_graph(7)).has_value());
}

TEST(GirthTest, MatchesEdgeDeletionOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_connected(3 + trial % 14, 0.06 + 0.002 * trial, rng);
    ASSERT_EQ(girth(g), oracle::girth(g)) << "trial " << trial;
  }
}

TEST(PathFormulaTest, MatchesMeasuredPaths) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    EXPECT_EQ(path_avec_closed_form(n), oracle::profile(path_graph(n)).avec) << n;
  }
}

TEST(WeightedAvecTest, UniformWeightsGiveAvec) {
  const Graph g = heawood();
  EXPECT_EQ(weighted_avec(g, WeightFunction::uniform(g.order())),
            eccentricity_profile(g).avec);
}

TEST(WeightedAvecTest, ConcentratedWeight) {
  // All weight on an end of P_4: avec_c = e(0) = 3.
  WeightFunction c({Rational(5), Rational(0), Rational(0), Rational(0)});
  EXPECT_EQ(weighted_avec(path_graph(4), c), 3);
  EXPECT_THROW(WeightFunction({Rational(-1)}), std::invalid_argument);
}

// Weighted avec never exceeds the path whose order is the rounded-up total
// weight.
TEST(WeightedAvecTest, PathDominatesIntegerWeights) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> weight(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_connected(1 + trial % 20, 0.1, rng);
    std::vector<Rational> w;
    for (std::size_t i = 0; i < g.order(); ++i) w.emplace_back(weight(rng));
    const WeightFunction c(w);
    const auto n = ceil(c.total()).get_ui();
    ASSERT_LE(weighted_avec(g, c), oracle::profile(path_graph(n)).avec);
  }
}

TEST(PowerGraphTest, AdjacencyIsDistanceAtMostK) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected(12, 0.05, rng);
    const auto d = oracle::floyd_warshall(g);
    for (std::uint32_t k = 1; k <= 4; ++k) {
      const Graph p = power_graph(g, k);
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
          ASSERT_EQ(p.has_edge(u, v), d[u][v] <= k);
    }
  }
}

TEST(LineGraphTest, PetersenLineGraph) {
  const LineGraph l = line_graph(petersen());
  EXPECT_EQ(l.graph.order(), 15u);
  // 3-regular source: every edge meets 2 * (3 - 1) others.
  EXPECT_EQ(l.graph.min_degree(), 4u);
  EXPECT_EQ(l.graph.max_degree(), 4u);
  for (const Edge& e : l.graph.edges()) {
    const Edge a = l.edge_of[e.u];
    const Edge b = l.edge_of[e.v];
    EXPECT_TRUE(a.has_endpoint(b.u) || a.has_endpoint(b.v));
  }
}

TEST(InducedTest, InducedPowerMatchesMaterialisedPower) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected(15, 0.04, rng);
    const std::vector<Vertex> subset{14, 2, 7, 9};
    for (std::uint32_t k = 1; k <= 5; ++k) {
      EXPECT_EQ(induced_power(g, subset, k).graph,
                induced_subgraph(power_graph(g, k), subset).graph);
    }
  }
}

TEST(InducedTest, RejectsBadSubsets) {
  const Graph g = path_graph(4);
  EXPECT_THROW(induced_subgraph(g, std::vector<Vertex>{}), std::domain_error);
  EXPECT_THROW(induced_subgraph(g, std::vector<Vertex>{1, 1}), std::invalid_argument);
  EXPECT_THROW(induced_subgraph(g, std::vector<Vertex>{4}), std::invalid_argument);
}

TEST(RationalTest, Formatting) {
  EXPECT_EQ(to_fraction(Rational(37, 4)), "37/4");
  EXPECT_EQ(to_fraction(Rational(8)), "8");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.666667");
  EXPECT_EQ(to_decimal(Rational(-3, 4)), "-0.750000");
  EXPECT_EQ(ceil(Rational(-3, 4)), 0);
  EXPECT_EQ(floor(Rational(-3, 4)), -1);
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
}

}  // namespace
}  // namespace eccb
