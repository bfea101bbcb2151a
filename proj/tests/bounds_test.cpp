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

#include <algorithm>

#include "eccb/bounds.hpp"
#include "eccb/generators.hpp"
#include "oracles.hpp"

namespace eccb {
namespace {

GraphParams params(std::uint64_t n, std::uint32_t delta, std::uint32_t big,
                   std::optional<std::uint32_t> g) {
  GraphParams p;
  p.n = n;
  p.min_degree = delta;
  p.max_degree = big;
  p.girth = g;
  return p;
}

const BoundResult& find(const std::vector<BoundResult>& rs, BoundId id) {
  const auto it = std::find_if(rs.begin(), rs.end(), [&](const auto& r) { return r.id == id; });
  EXPECT_NE(it, rs.end());
  return *it;
}

TEST(MooreOrderTest, KnownOrders) {
  EXPECT_EQ(moore_order_odd(3, 3), 4);
  EXPECT_EQ(moore_order_odd(3, 5), 10);
  EXPECT_EQ(moore_order_odd(3, 7), 22);
  EXPECT_EQ(moore_order_odd(7, 5), 50);
  EXPECT_EQ(moore_order_even(3, 4), 6);
  EXPECT_EQ(moore_order_even(3, 6), 14);
  EXPECT_EQ(moore_order_even(4, 4), 8);
}

TEST(MooreOrderTest, ClosedFormsMatchGeometricSums) {
  for (std::uint32_t d = 3; d <= 20; ++d) {
    for (std::uint32_t g = 3; g <= 13; g += 2) EXPECT_EQ(moore_order_odd(d, g), oracle::moore_odd(d, g));
    for (std::uint32_t g = 4; g <= 12; g += 2) EXPECT_EQ(moore_order_even(d, g), oracle::moore_even(d, g));
  }
}

TEST(MooreOrderTest, Errors) {
  EXPECT_THROW(moore_order_odd(2, 5), std::domain_error);
  EXPECT_THROW(moore_order_odd(3, 6), std::domain_error);
  EXPECT_THROW(moore_order_even(3, 5), std::domain_error);
  EXPECT_THROW(moore_order_even(2, 4), std::domain_error);
}

TEST(ThmGirthTest, WorkedValues) {
  const auto odd = bound_thm_girth(params(10, 3, 3, 5));
  EXPECT_EQ(odd.id, BoundId::ThmGirthOdd);
  EXPECT_EQ(*odd.value, Rational(37, 4));
  EXPECT_EQ(odd.constants.at("K"), 10);
  EXPECT_EQ(*bound_thm_girth(params(6, 3, 3, 4)).value, 7);
  const auto six = bound_thm_girth(params(14, 3, 3, 6));
  EXPECT_EQ(six.id, BoundId::ThmGirthEven);
  EXPECT_EQ(*six.value, Rational(23, 2));
}

TEST(ThmGirthTest, CeilingIsExact) {
  // n = K + 1 rounds the copy count up to 2.
  EXPECT_EQ(*bound_thm_girth(params(11, 3, 3, 5)).value, Rational(15, 2) + Rational(11, 2));
}

TEST(ThmGirthTest, NotApplicableBelowMinDegreeThree) {
  const auto r = bound_thm_girth(params(6, 2, 2, 6));
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.value.has_value());
  EXPECT_NE(r.reason.find("delta >= 3"), std::string::npos);
  EXPECT_FALSE(bound_thm_girth(params(6, 3, 3, std::nullopt)).applicable);
}

TEST(ThmGirthTest, ReportsBothSixCycleForms) {
  const auto r = bound_thm_girth(params(100, 4, 4, 6));
  // middle: (9/2) ceil(100*2 / (2*26)) + 7; right: (9/2) ceil(100/26) + 7.
  EXPECT_EQ(r.constants.at("g6Middle"), Rational(9, 2) * 4 + 7);
  EXPECT_EQ(r.constants.at("g6Right"), Rational(9, 2) * 4 + 7);
  EXPECT_EQ(*r.value, Rational(9, 2) * oracle::ceil_div(Rational(100, 26)) + 7);
}

TEST(ThmGirthMaxDegTest, WorkedValue) {
  const auto r = bound_thm_girth_maxdeg(params(100, 3, 5, 5));
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.constants.at("K1"), 10);
  EXPECT_EQ(r.constants.at("K2"), 16);
  EXPECT_EQ(*r.value, Rational(4513, 100));
}

TEST(ThmGirthMaxDegTest, RegularCollapse) {
  for (std::uint32_t d = 3; d <= 20; ++d) {
    for (std::uint32_t g = 3; g <= 12; ++g) {
      if (g % 2 == 1) {
        EXPECT_EQ(hub_order_odd(d, d, g), moore_order_odd(d, g));
      } else {
        EXPECT_EQ(hub_order_even(d, d, g), half_moore_order_even(d, g));
        EXPECT_EQ(2 * half_moore_order_even(d, g), moore_order_even(d, g));
      }
    }
  }
  EXPECT_EQ(hub_order_even(3, 3, 6), 7);
}

TEST(ThmGirthMaxDegTest, SmallOrderIsNotApplicable) {
  const auto r = bound_thm_girth_maxdeg(params(15, 3, 5, 5));
  EXPECT_FALSE(r.applicable);
  EXPECT_NE(r.reason.find("K2"), std::string::npos);
}

TEST(LegacyTest, WorkedValues) {
  EXPECT_EQ(*bound_legacy(params(20, 3, 3, 3), BoundId::Eq1).value, 15);
  EXPECT_EQ(*bound_legacy(params(12, 3, 3, 4), BoundId::Eq2).value, 11);
  EXPECT_EQ(*bound_legacy(params(6, 3, 3, 4), BoundId::Eq2).value, 8);
  const auto eq8 = bound_legacy(params(64, 3, 3, 5), BoundId::Eq8);
  EXPECT_EQ(eq8.constants.at("epsMaxDeg"), 8);
  EXPECT_EQ(eq8.constants.at("epsMinDeg"), 8);
  EXPECT_EQ(*eq8.value, Rational(15, 4) * 8 + Rational(37, 4));
}

TEST(LegacyTest, ApplicabilityFollowsGirth) {
  const auto p = params(10, 3, 3, 3);
  EXPECT_TRUE(bound_legacy(p, BoundId::Eq1).applicable);
  for (BoundId id : {BoundId::Eq2, BoundId::Eq3, BoundId::Eq4, BoundId::Eq5, BoundId::Eq7,
                     BoundId::Eq8}) {
    EXPECT_FALSE(bound_legacy(p, id).applicable) << to_string(id);
  }
  EXPECT_TRUE(bound_legacy(params(10, 1, 3, std::nullopt), BoundId::Eq1).applicable == false);
}

// With x = n/(delta+1) the g = 3 value is (9/4)ceil(x) + 5/2, so it is below
// Eq1 exactly when ceil(x) - x < 5/9, and never more than 1 above it.
TEST(ReductionTest, GirthThreeAgainstEqOne) {
  for (std::uint32_t d = 3; d <= 12; ++d) {
    for (std::uint64_t n = d + 1; n <= 400; ++n) {
      const auto p = params(n, d, d, 3);
      const Rational x(Integer(std::to_string(n)), Integer(d + 1));
      const Rational thm = *bound_thm_girth(p).value;
      const Rational eq1 = *bound_legacy(p, BoundId::Eq1).value;
      EXPECT_EQ(thm, Rational(9, 4) * oracle::ceil_div(x) + Rational(5, 2));
      EXPECT_EQ(thm < eq1, Rational(oracle::ceil_div(x)) - x < Rational(5, 9)) << n << "," << d;
      EXPECT_LT(thm, eq1 + 1);
    }
  }
}

TEST(ReductionTest, GirthThreeCounterexampleToStrictComparison) {
  const auto p = params(5, 3, 3, 3);
  EXPECT_EQ(*bound_thm_girth(p).value, 7);
  EXPECT_EQ(*bound_legacy(p, BoundId::Eq1).value, Rational(105, 16));
}

TEST(ReductionTest, GirthFourIsEqTwoMinusOne) {
  for (std::uint32_t d = 3; d <= 12; ++d) {
    for (std::uint64_t n = 2 * d; n <= 400; ++n) {
      const auto p = params(n, d, d, 4);
      EXPECT_EQ(*bound_thm_girth(p).value, *bound_legacy(p, BoundId::Eq2).value - 1);
    }
  }
}

TEST(LowerChainTest, WorkedValues) {
  EXPECT_EQ(lower_bound_chain(params(20, 3, 3, 5), 2), 3);
  EXPECT_EQ(lower_bound_chain(params(40, 3, 3, 5), 4), Rational(21, 2));
  EXPECT_EQ(lower_bound_chain(params(28, 3, 3, 6), 2), Rational(9, 2));
  EXPECT_THROW(lower_bound_chain(params(21, 3, 3, 5), 2), std::domain_error);
}

TEST(EvaluateAllTest, Petersen) {
  const auto rs = evaluate_all(petersen());
  const auto& thm = find(rs, BoundId::ThmGirthOdd);
  EXPECT_EQ(*thm.value, Rational(37, 4));
  EXPECT_EQ(thm.satisfied, std::optional<bool>(true));
  EXPECT_FALSE(find(rs, BoundId::Eq4).applicable);
}

TEST(EvaluateAllTest, CompleteAndCycle) {
  const auto k4 = evaluate_all(complete_graph(4));
  EXPECT_TRUE(find(k4, BoundId::Eq1).applicable);
  EXPECT_TRUE(find(k4, BoundId::ThmGirthOdd).applicable);
  EXPECT_FALSE(find(k4, BoundId::Eq4).applicable);
  const auto c6 = evaluate_all(cycle_graph(6));
  EXPECT_TRUE(find(c6, BoundId::Eq1).applicable);
  EXPECT_FALSE(find(c6, BoundId::ThmGirthEven).applicable);
  EXPECT_FALSE(find(c6, BoundId::ThmGirthMaxDegEven).applicable);
}

TEST(EvaluateAllTest, SatisfiedMatchesExactComparison) {
  const auto p = params(30, 3, 4, 5);
  for (const auto& r : evaluate_all(p, Rational(13))) {
    if (r.applicable) EXPECT_EQ(*r.satisfied, Rational(13) <= *r.value);
  }
}

TEST(BoundJsonTest, Shape) {
  const auto j = to_json(bound_thm_girth(params(10, 3, 3, 5)));
  EXPECT_EQ(j["bound"], "ThmGirthOdd");
  EXPECT_EQ(j["value"], "37/4");
  EXPECT_EQ(j["constants"]["K"], "10");
  EXPECT_EQ(j["applicable"], true);
}

TEST(BoundIdTest, RoundTrip) {
  for (int i = 0; i <= static_cast<int>(BoundId::LowerChainEven); ++i) {
    const auto id = static_cast<BoundId>(i);
    EXPECT_EQ(parse_bound_id(to_string(id)), id);
  }
  EXPECT_FALSE(parse_bound_id("Eq9").has_value());
}

TEST(ValidateTest, RejectsInconsistentParams) {
  EXPECT_THROW(validate(params(10, 4, 3, 5)), std::invalid_argument);
  EXPECT_THROW(validate(params(3, 3, 3, 3)), std::invalid_argument);
}

}  // namespace
}  // namespace eccb
