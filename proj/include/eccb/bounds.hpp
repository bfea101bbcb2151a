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

#ifndef ECCB_BOUNDS_HPP_
#define ECCB_BOUNDS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eccb/graph.hpp"
#include "eccb/rational.hpp"

namespace eccb {

// Upper bounds on the average eccentricity.  Eq1..Eq8 are the legacy
// order/degree bounds; the ThmGirth* family is parameterised by girth.  The
// LowerChain* entries are lower bounds for the Moore chain family.
enum class BoundId {
  Eq1, Eq2, Eq3, Eq4, Eq5, Eq6, Eq7, Eq8,
  ThmGirthOdd, ThmGirthEven,
  ThmGirthMaxDegOdd, ThmGirthMaxDegEven,
  LowerChainOdd, LowerChainEven,
};

std::string_view to_string(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view name);
const std::vector<BoundId>& legacy_bound_ids();

struct GraphParams {
  std::uint64_t n = 0;
  std::uint32_t min_degree = 0;
  std::uint32_t max_degree = 0;
  // nullopt for forests.
  std::optional<std::uint32_t> girth;
};

// Throws std::invalid_argument when the parameters cannot describe a graph.
void validate(const GraphParams& p);

GraphParams measure(const Graph& g);

struct BoundResult {
  BoundId id = BoundId::Eq1;
  bool applicable = false;
  // Why the bound does not apply; empty when it does.
  std::string reason;
  std::optional<Rational> value;
  std::map<std::string, Rational> constants;
  // Filled in by evaluate_all: avec <= value, exactly.
  std::optional<bool> satisfied;
};

nlohmann::ordered_json to_json(const BoundResult& r);

// 1 + delta/(delta-2) * ((delta-1)^((g-1)/2) - 1).  Requires delta >= 3 and
// odd g >= 3; throws std::domain_error otherwise.
Rational moore_order_odd(std::uint32_t delta, std::uint32_t g);
// 2/(delta-2) * ((delta-1)^(g/2) - 1).  Requires delta >= 3 and even g >= 4.
Rational moore_order_even(std::uint32_t delta, std::uint32_t g);

// Cell-size constants of the maximum-degree refinement.
Rational hub_order_odd(std::uint32_t delta, std::uint32_t max_degree, std::uint32_t g);
Rational half_moore_order_even(std::uint32_t delta, std::uint32_t g);
Rational hub_order_even(std::uint32_t delta, std::uint32_t max_degree, std::uint32_t g);

BoundResult bound_thm_girth(const GraphParams& p);
BoundResult bound_thm_girth_maxdeg(const GraphParams& p);
BoundResult bound_legacy(const GraphParams& p, BoundId which);

// Lower bound on avec of the chain of k Moore graphs with parameters
// (delta, g).  Throws std::domain_error when p.n != k * (Moore order).
Rational lower_bound_chain(const GraphParams& p, std::uint64_t k);

// The value of a bound for already-measured avec, with satisfied filled in.
std::vector<BoundResult> evaluate_all(const GraphParams& p, const Rational& avec);
// Measures the graph first.  Throws DisconnectedGraphError.
std::vector<BoundResult> evaluate_all(const Graph& g);

}  // namespace eccb

#endif  // ECCB_BOUNDS_HPP_
