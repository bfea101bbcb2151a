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

#include "eccb/bounds.hpp"
#include "eccb/extremal.hpp"
#include "eccb/generators.hpp"
#include "oracles.hpp"

namespace eccb {
namespace {

TEST(MooreCatalogTest, KnownEntries) {
  const auto petersen_graph = moore_catalog(3, 5);
  ASSERT_TRUE(petersen_graph.has_value());
  EXPECT_EQ(*petersen_graph, petersen());
  EXPECT_EQ(moore_catalog(4, 3)->order(), 5u);
  EXPECT_EQ(*moore_catalog(3, 6), heawood());
  EXPECT_EQ(moore_spec(7, 5)->source, MooreSource::HoffmanSingleton);
  EXPECT_EQ(moore_spec(6, 6)->q, 5u);
  EXPECT_EQ(moore_spec(2, 9)->source, MooreSource::Cycle);
}

TEST(MooreCatalogTest, NotInCatalog) {
  EXPECT_FALSE(moore_catalog(4, 5).has_value());
  EXPECT_FALSE(moore_catalog(7, 6).has_value());  // q = 6 is not a prime power
  EXPECT_FALSE(moore_catalog(3, 7).has_value());
  EXPECT_FALSE(moore_catalog(1, 3).has_value());
  EXPECT_THROW(make_chain_spec(3, 7, 2), NotInCatalogError);
}

TEST(MooreCatalogTest, EveryEntryIsRegularWithExactGirthAndOrder) {
  for (std::uint32_t d = 2; d <= 10; ++d) {
    for (std::uint32_t g = 3; g <= 8; ++g) {
      const auto spec = moore_spec(d, g);
      if (!spec) continue;
      const Graph graph = *moore_catalog(d, g);
      EXPECT_EQ(graph.min_degree(), d);
      EXPECT_EQ(graph.max_degree(), d);
      EXPECT_EQ(girth(graph), g);
      EXPECT_EQ(graph.order(), spec->order);
      if (d >= 3) {
        const Rational expected = g % 2 ? moore_order_odd(d, g) : moore_order_even(d, g);
        EXPECT_EQ(Rational(spec->order), expected);
      }
      EXPECT_EQ(eccentricity_profile(graph).diameter, spec->diameter);
    }
  }
}

TEST(ChainTest, SingleCopyIsMooreGraph) {
  EXPECT_EQ(chain_graph(make_chain_spec(3, 5, 1)), petersen());
  const auto spec = make_chain_spec(3, 5, 2);
  EXPECT_TRUE(spec.deleted_edges.empty());
  EXPECT_EQ(spec.link_edges.size(), 1u);
}

TEST(ChainTest, ThreePetersens) {
  const auto spec = make_chain_spec(3, 5, 3);
  const Graph g = chain_graph(spec);
  EXPECT_EQ(g.order(), 30u);
  EXPECT_EQ(oracle::profile(g).diameter, 10u);
  EXPECT_EQ(spec.deleted_edges.size(), 1u);
  EXPECT_EQ(spec.link_edges.size(), 2u);
  EXPECT_EQ(g.size(), 3 * 15u - 1 + 2);
}

TEST(ChainTest, TwoHeawoods) {
  const Graph g = chain_graph(make_chain_spec(3, 6, 2));
  EXPECT_EQ(g.order(), 28u);
  EXPECT_EQ(oracle::profile(g).diameter, 7u);
}

TEST(ChainTest, StructuralInvariants) {
  for (const auto& [d, g] : {std::pair{3u, 5u}, {3u, 6u}, {4u, 4u}, {3u, 3u}, {7u, 5u},
                             {4u, 6u}}) {
    for (std::uint32_t k = 1; k <= 5; ++k) {
      const Graph graph = chain_graph(make_chain_spec(d, g, k));
      EXPECT_GE(graph.min_degree(), d);
      EXPECT_TRUE(is_connected(graph));
      EXPECT_GE(*girth(graph), g);
      EXPECT_EQ(graph.order(), k * moore_spec(d, g)->order);
    }
  }
}

TEST(ChainTest, DiameterAndRadiusFormulas) {
  for (std::uint32_t k = 1; k <= 8; ++k) {
    const auto odd = oracle::profile(chain_graph(make_chain_spec(3, 5, k)));
    if (k >= 2) {
      EXPECT_EQ(odd.diameter, 5 * (k - 1));
      EXPECT_EQ(odd.radius, (5 * (k - 1) + 1) / 2);
    }
    const auto even = oracle::profile(chain_graph(make_chain_spec(3, 6, k)));
    if (k >= 2) {
      EXPECT_EQ(even.diameter, 6 * (k - 1) + 1);
      EXPECT_EQ(even.radius, 3 * (k - 1) + 1);
    }
  }
}

TEST(ChainTest, BaseEdgeOverride) {
  const auto spec = make_chain_spec(3, 5, 3, Edge(0, 8));
  EXPECT_EQ(spec.link_edges.front(), Edge(10, 8));
  EXPECT_THROW(make_chain_spec(3, 5, 3, Edge(0, 1)), std::invalid_argument);
  EXPECT_THROW(make_chain_spec(3, 5, 0), std::invalid_argument);
  // Petersen is edge-transitive, so the measured avec is unchanged.
  EXPECT_EQ(eccentricity_profile(chain_graph(spec)).avec,
            eccentricity_profile(chain_graph(make_chain_spec(3, 5, 3))).avec);
}

TEST(SharpnessTest, WorkedRows) {
  const auto rows = sharpness_report(3, 5, 1, 2);
  EXPECT_EQ(rows[0].avec, 2);
  EXPECT_EQ(*rows[0].upper, Rational(37, 4));
  EXPECT_EQ(rows[1].n, 20u);
  EXPECT_EQ(rows[1].lower, 3);
  EXPECT_EQ(*rows[1].upper, 13);
  EXPECT_EQ(rows[1].avec, oracle::profile(chain_graph(make_chain_spec(3, 5, 2))).avec);
  const auto even = sharpness_report(3, 6, 2, 2);
  EXPECT_EQ(even[0].n, 28u);
  EXPECT_EQ(even[0].lower, Rational(9, 2));
  EXPECT_EQ(*even[0].upper, 16);
}

TEST(SharpnessTest, SandwichAndGap) {
  for (const auto& [d, g] : {std::pair{3u, 5u}, {3u, 6u}, {3u, 4u}, {4u, 3u}, {4u, 6u}}) {
    for (const auto& r : sharpness_report(d, g, 1, 6)) {
      EXPECT_LE(r.lower, r.avec);
      EXPECT_LE(r.avec, *r.upper);
      EXPECT_TRUE(r.gap_ok) << d << "," << g << " k=" << r.k;
    }
  }
  EXPECT_EQ(sharpness_gap_limit(5), 10);
  EXPECT_EQ(sharpness_gap_limit(6), Rational(23, 2));
}

TEST(SharpnessTest, CsvRendering) {
  std::ostringstream out;
  write_sharpness_csv(out, sharpness_report(3, 5, 1, 1));
  EXPECT_EQ(out.str(),
            "k,n,avec,avec_exact,lower,lower_exact,upper,upper_exact,gap,gap_exact,diameter,"
            "radius\n"
            "1,10,2.000000,2,-0.750000,-3/4,9.250000,37/4,7.250000,29/4,2,2\n");
}

}  // namespace
}  // namespace eccb
