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

#include <sstream>

#include "eccb/generators.hpp"
#include "oracles.hpp"

namespace eccb {
namespace {

bool is_bipartite(const Graph& g) {
  const auto d = oracle::floyd_warshall(g);
  for (const Edge& e : g.edges()) {
    if (d[0][e.u] % 2 == d[0][e.v] % 2) return false;
  }
  return true;
}

void expect_regular(const Graph& g, std::size_t degree) {
  EXPECT_EQ(g.min_degree(), degree);
  EXPECT_EQ(g.max_degree(), degree);
}

TEST(NamedTest, SmallFamilies) {
  EXPECT_EQ(oracle::profile(named("path:5")).avec, Rational(16, 5));
  const Graph k33 = named("bipartite:3,3");
  EXPECT_EQ(oracle::girth(k33), 4u);
  EXPECT_TRUE(is_bipartite(k33));
  EXPECT_EQ(named("complete:5").size(), 10u);
  EXPECT_EQ(named("cycle:7").size(), 7u);
}

TEST(NamedTest, Petersen) {
  const Graph g = named("petersen");
  EXPECT_EQ(g.order(), 10u);
  EXPECT_EQ(g.size(), 15u);
  expect_regular(g, 3);
  EXPECT_EQ(oracle::girth(g), 5u);
  EXPECT_EQ(g.edges().front(), Edge(0, 7));
}

TEST(NamedTest, Heawood) {
  const Graph g = named("heawood");
  EXPECT_EQ(g.order(), 14u);
  expect_regular(g, 3);
  EXPECT_EQ(oracle::girth(g), 6u);
  EXPECT_TRUE(is_bipartite(g));
}

TEST(NamedTest, HoffmanSingleton) {
  const Graph g = named("hoffman-singleton");
  EXPECT_EQ(g.order(), 50u);
  EXPECT_EQ(g.size(), 175u);
  expect_regular(g, 7);
  EXPECT_EQ(oracle::girth(g), 5u);
  EXPECT_EQ(oracle::profile(g).diameter, 2u);
}

TEST(NamedTest, ProjectivePlanes) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    const Graph g = projective_plane_incidence(q);
    EXPECT_EQ(g.order(), 2u * (q * q + q + 1)) << q;
    expect_regular(g, q + 1);
    EXPECT_EQ(girth(g), 6u) << q;
    EXPECT_EQ(eccentricity_profile(g).diameter, 3u) << q;
  }
  EXPECT_EQ(oracle::girth(projective_plane_incidence(3)), 6u);
  EXPECT_THROW(projective_plane_incidence(6), std::domain_error);
}

TEST(NamedTest, RejectsUnknownSpecs) {
  EXPECT_THROW(named("dodecahedron"), std::invalid_argument);
  EXPECT_THROW(named("path:0"), std::domain_error);
  EXPECT_THROW(named("cycle:2"), std::domain_error);
  EXPECT_THROW(named("bipartite:3"), std::invalid_argument);
}

GeneratorConfig config(std::uint32_t n, std::uint32_t delta, std::uint32_t g,
                       std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.delta = delta;
  cfg.girth = g;
  cfg.seed = seed;
  return cfg;
}

TEST(RandomGeneratorTest, OutputPropertiesReverified) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = random_min_degree_girth(config(20 + 3 * seed, 3, 5, seed));
    ASSERT_TRUE(std::holds_alternative<Graph>(r)) << seed;
    const Graph& g = std::get<Graph>(r);
    EXPECT_TRUE(oracle::profile(g).connected);
    EXPECT_GE(g.min_degree(), 3u);
    EXPECT_GE(*oracle::girth(g), 5u);
  }
}

TEST(RandomGeneratorTest, ImpossibleInstanceFails) {
  const auto r = random_min_degree_girth(config(4, 3, 4, 1));
  ASSERT_TRUE(std::holds_alternative<GeneratorFailure>(r));
  const auto& f = std::get<GeneratorFailure>(r);
  EXPECT_EQ(f.restarts, 50u);
  EXPECT_GT(f.attempts, 0u);
  EXPECT_FALSE(f.reason.empty());
}

// Every connected 6-vertex graph with min degree 3 and girth >= 4, found by
// exhaustive enumeration, is K_{3,3}; the generator must land on one of them.
TEST(RandomGeneratorTest, SixVerticesForcesCompleteBipartite) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) all.emplace_back(u, v);
  std::size_t admissible = 0;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) chosen.push_back(all[i]);
    const Graph g = Graph::from_edges(6, chosen);
    if (g.min_degree() < 3 || !oracle::profile(g).connected) continue;
    const auto gi = oracle::girth(g);
    if (!gi || *gi < 4) continue;
    ++admissible;
    EXPECT_EQ(g.size(), 9u);
    EXPECT_TRUE(is_bipartite(g));
  }
  EXPECT_EQ(admissible, 10u);  // labelled copies of K_{3,3}
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = random_min_degree_girth(config(6, 3, 4, seed));
    ASSERT_TRUE(std::holds_alternative<Graph>(r));
    const Graph& g = std::get<Graph>(r);
    EXPECT_EQ(g.size(), 9u);
    EXPECT_TRUE(is_bipartite(g));
  }
}

TEST(RandomGeneratorTest, SameSeedSameBytes) {
  const auto cfg = config(80, 3, 6, 42);
  std::ostringstream a;
  std::ostringstream b;
  write_generated(a, std::get<Graph>(random_min_degree_girth(cfg)), cfg);
  write_generated(b, std::get<Graph>(random_min_degree_girth(cfg)), cfg);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("# seed=42 delta=3 g=6"), std::string::npos);
  EXPECT_EQ(parse_edge_list(a.str()), std::get<Graph>(random_min_degree_girth(cfg)));
}

TEST(RandomGeneratorTest, DifferentSeedsUsuallyDiffer) {
  const Graph a = std::get<Graph>(random_min_degree_girth(config(60, 3, 5, 1)));
  const Graph b = std::get<Graph>(random_min_degree_girth(config(60, 3, 5, 2)));
  EXPECT_FALSE(a == b);
}

TEST(RandomGeneratorTest, RejectsBadConfig) {
  EXPECT_THROW(random_min_degree_girth(config(10, 1, 5, 1)), std::invalid_argument);
  EXPECT_THROW(random_min_degree_girth(config(10, 3, 2, 1)), std::invalid_argument);
  EXPECT_THROW(random_min_degree_girth(config(3, 3, 3, 1)), std::invalid_argument);
}

}  // namespace
}  // namespace eccb
