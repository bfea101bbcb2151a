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

#include "eccb/bounds.hpp"

#include <array>
#include <stdexcept>

namespace eccb {

namespace {

constexpr std::array<std::pair<BoundId, std::string_view>, 14> kNames{{
    {BoundId::Eq1, "Eq1"},
    {BoundId::Eq2, "Eq2"},
    {BoundId::Eq3, "Eq3"},
    {BoundId::Eq4, "Eq4"},
    {BoundId::Eq5, "Eq5"},
    {BoundId::Eq6, "Eq6"},
    {BoundId::Eq7, "Eq7"},
    {BoundId::Eq8, "Eq8"},
    {BoundId::ThmGirthOdd, "ThmGirthOdd"},
    {BoundId::ThmGirthEven, "ThmGirthEven"},
    {BoundId::ThmGirthMaxDegOdd, "ThmGirthMaxDegOdd"},
    {BoundId::ThmGirthMaxDegEven, "ThmGirthMaxDegEven"},
    {BoundId::LowerChainOdd, "LowerChainOdd"},
    {BoundId::LowerChainEven, "LowerChainEven"},
}};

Rational integer(std::uint64_t v) { return Rational(Integer(std::to_string(v))); }

Rational ceil_q(const Rational& q) { return Rational(ceil(q)); }

// (3g/4) * ceil(n / order) + 3g/2 - 2
Rational girth_bound_value(std::uint64_t n, std::uint32_t g, const Rational& order) {
  const Rational gg = integer(g);
  Rational v = Rational(3, 4) * gg * ceil_q(integer(n) / order) + Rational(3, 2) * gg - 2;
  v.canonicalize();
  return v;
}

BoundResult not_applicable(BoundId id, std::string reason) {
  BoundResult r;
  r.id = id;
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

BoundResult applicable(BoundId id, Rational value,
                       std::map<std::string, Rational> constants = {}) {
  BoundResult r;
  r.id = id;
  r.applicable = true;
  value.canonicalize();
  r.value = std::move(value);
  r.constants = std::move(constants);
  return r;
}

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "?";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const auto& [key, text] : kNames) {
    if (text == name) return key;
  }
  return std::nullopt;
}

const std::vector<BoundId>& legacy_bound_ids() {
  static const std::vector<BoundId> ids{BoundId::Eq1, BoundId::Eq2, BoundId::Eq3,
                                        BoundId::Eq4, BoundId::Eq5, BoundId::Eq6,
                                        BoundId::Eq7, BoundId::Eq8};
  return ids;
}

void validate(const GraphParams& p) {
  if (p.n == 0) throw std::invalid_argument("graph order must be positive");
  if (p.min_degree > p.max_degree) {
    throw std::invalid_argument("minimum degree exceeds maximum degree");
  }
  if (p.n > 1 && p.max_degree > p.n - 1) {
    throw std::invalid_argument("maximum degree exceeds n-1");
  }
  if (p.girth && *p.girth < 3) throw std::invalid_argument("girth must be at least 3");
}

GraphParams measure(const Graph& g) {
  GraphParams p;
  p.n = g.order();
  p.min_degree = static_cast<std::uint32_t>(g.min_degree());
  p.max_degree = static_cast<std::uint32_t>(g.max_degree());
  p.girth = girth(g);
  return p;
}

nlohmann::ordered_json to_json(const BoundResult& r) {
  nlohmann::ordered_json out;
  out["bound"] = std::string(to_string(r.id));
  out["value"] = r.value ? nlohmann::ordered_json(to_fraction(*r.value))
                         : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json constants = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.constants) constants[name] = to_fraction(value);
  out["constants"] = std::move(constants);
  out["applicable"] = r.applicable;
  if (!r.applicable) out["reason"] = r.reason;
  out["satisfied"] = r.satisfied ? nlohmann::ordered_json(*r.satisfied)
                                 : nlohmann::ordered_json(nullptr);
  return out;
}

Rational moore_order_odd(std::uint32_t delta, std::uint32_t g) {
  if (delta <= 2) throw std::domain_error("formula singular at delta=2; needs delta >= 3");
  if (g < 3 || g % 2 == 0) throw std::domain_error("odd-girth order needs odd g >= 3");
  Rational k = 1 + Rational(delta, delta - 2) * Rational(ipow(delta - 1, (g - 1) / 2) - 1);
  k.canonicalize();
  return k;
}

Rational moore_order_even(std::uint32_t delta, std::uint32_t g) {
  if (delta <= 2) throw std::domain_error("formula singular at delta=2; needs delta >= 3");
  if (g < 4 || g % 2 != 0) throw std::domain_error("even-girth order needs even g >= 4");
  Rational l = Rational(2, delta - 2) * Rational(ipow(delta - 1, g / 2) - 1);
  l.canonicalize();
  return l;
}

Rational hub_order_odd(std::uint32_t delta, std::uint32_t max_degree, std::uint32_t g) {
  if (delta <= 2) throw std::domain_error("formula singular at delta=2; needs delta >= 3");
  if (g < 3 || g % 2 == 0) throw std::domain_error("odd-girth order needs odd g >= 3");
  Rational k =
      1 + Rational(max_degree, delta - 2) * Rational(ipow(delta - 1, (g - 1) / 2) - 1);
  k.canonicalize();
  return k;
}

Rational half_moore_order_even(std::uint32_t delta, std::uint32_t g) {
  if (delta <= 2) throw std::domain_error("formula singular at delta=2; needs delta >= 3");
  if (g < 4 || g % 2 != 0) throw std::domain_error("even-girth order needs even g >= 4");
  Rational l = Rational(ipow(delta - 1, g / 2) - 1) / (delta - 2);
  l.canonicalize();
  return l;
}

Rational hub_order_even(std::uint32_t delta, std::uint32_t max_degree, std::uint32_t g) {
  if (delta <= 2) throw std::domain_error("formula singular at delta=2; needs delta >= 3");
  if (g < 4 || g % 2 != 0) throw std::domain_error("even-girth order needs even g >= 4");
  Rational l = Rational(max_degree) +
               Rational(max_degree - 1, delta - 2) *
                   Rational(ipow(delta - 1, (g - 2) / 2) - (delta - 1));
  l.canonicalize();
  return l;
}

BoundResult bound_thm_girth(const GraphParams& p) {
  validate(p);
  if (!p.girth) return not_applicable(BoundId::ThmGirthOdd, "graph is acyclic");
  const std::uint32_t g = *p.girth;
  const bool odd = g % 2 == 1;
  const BoundId id = odd ? BoundId::ThmGirthOdd : BoundId::ThmGirthEven;
  if (p.min_degree < 3) return not_applicable(id, "requires minimum degree delta >= 3");
  if (odd) {
    const Rational k = moore_order_odd(p.min_degree, g);
    return applicable(id, girth_bound_value(p.n, g, k), {{"K", k}});
  }
  const Rational l = moore_order_even(p.min_degree, g);
  BoundResult r = applicable(id, girth_bound_value(p.n, g, l), {{"L", l}});
  if (g == 6) {
    // Two ways of writing the g = 6 specialisation; both are reported.
    const std::uint64_t d = p.min_degree;
    const Rational n = integer(p.n);
    Rational middle = Rational(9, 2) *
                          ceil_q(n * Rational(d - 2) /
                                 (2 * Rational(ipow(d - 1, 3) - 1))) + 7;
    Rational right = Rational(9, 2) * ceil_q(n / Rational(2 * (d * d - d + 1))) + 7;
    middle.canonicalize();
    right.canonicalize();
    r.constants["g6Middle"] = middle;
    r.constants["g6Right"] = right;
  }
  return r;
}

BoundResult bound_thm_girth_maxdeg(const GraphParams& p) {
  validate(p);
  if (!p.girth) return not_applicable(BoundId::ThmGirthMaxDegOdd, "graph is acyclic");
  const std::uint32_t g = *p.girth;
  const bool odd = g % 2 == 1;
  const BoundId id = odd ? BoundId::ThmGirthMaxDegOdd : BoundId::ThmGirthMaxDegEven;
  if (p.min_degree < 3) return not_applicable(id, "requires minimum degree delta >= 3");
  const Rational n = integer(p.n);
  const Rational gg = integer(g);
  if (odd) {
    const Rational k1 = moore_order_odd(p.min_degree, g);
    const Rational k2 = hub_order_odd(p.min_degree, p.max_degree, g);
    if (n < k2) return not_applicable(id, "n < K2 = " + to_fraction(k2));
    Rational v = Rational(3, 4) * gg * ((n - k2) / k1) * (1 + (k2 - k1) / (3 * n)) +
                 3 * gg - 2;
    return applicable(id, v, {{"K1", k1}, {"K2", k2}});
  }
  const Rational l1 = half_moore_order_even(p.min_degree, g);
  const Rational l2 = hub_order_even(p.min_degree, p.max_degree, g);
  if (n < l2) return not_applicable(id, "n < L2 = " + to_fraction(l2));
  Rational v = Rational(3, 4) * gg * ((n - l2) / (2 * l1)) * (1 + (l2 - l1) / (3 * n)) +
               Rational(21, 8) * gg - 2;
  return applicable(id, v, {{"L1", l1}, {"L2", l2}});
}

BoundResult bound_legacy(const GraphParams& p, BoundId which) {
  validate(p);
  const std::uint64_t d = p.min_degree;
  const std::uint64_t big = p.max_degree;
  const Rational n = integer(p.n);
  if (d < 2) return not_applicable(which, "requires minimum degree delta >= 2");
  auto need_girth = [&](std::uint32_t at_least) -> std::optional<std::string> {
    if (!p.girth || *p.girth < at_least) {
      return "requires girth >= " + std::to_string(at_least);
    }
    return std::nullopt;
  };
  const Rational eps_min = Rational(d * d - 2 * (d / 2) + 1);
  const Rational eps_max = Rational(big * d - 2 * (big / 2) + 1);
  switch (which) {
    case BoundId::Eq1:
      return applicable(which, Rational(9, 4) * n / (d + 1) + Rational(15, 4));
    case BoundId::Eq2:
      if (auto why = need_girth(4)) return not_applicable(which, *why);
      return applicable(which, 3 * ceil_q(n / Rational(2 * d)) + 5);
    case BoundId::Eq3:
      if (auto why = need_girth(5)) return not_applicable(which, *why);
      return applicable(which, Rational(15, 4) * ceil_q(n / eps_min) + Rational(11, 2),
                        {{"epsMinDeg", eps_min}});
    case BoundId::Eq4:
      if (auto why = need_girth(6)) return not_applicable(which, *why);
      return applicable(which,
                        Rational(9, 2) * ceil_q(n / Rational(2 * d * d - 2 * d + 2)) + 8);
    case BoundId::Eq5:
      if (auto why = need_girth(6)) return not_applicable(which, *why);
      return applicable(which,
                        Rational(9, 2) * ceil_q(n / Rational(2 * d * d - 5 * d + 5)) + 8);
    case BoundId::Eq6:
      return applicable(which,
                        Rational(9, 4) * (n - big - 1) / (d + 1) *
                                (1 + Rational(big - d) / (3 * n)) + 7);
    case BoundId::Eq7:
      if (auto why = need_girth(4)) return not_applicable(which, *why);
      return applicable(which, 3 * (n - big) / (2 * Rational(d)) *
                                       (1 + Rational(big - d) / (3 * n)) +
                                   Rational(19, 2));
    case BoundId::Eq8:
      if (auto why = need_girth(5)) return not_applicable(which, *why);
      return applicable(which,
                        Rational(15, 4) * ((n - eps_max + eps_min) / eps_min) *
                                (1 + (eps_max - eps_min) / (3 * n)) +
                            Rational(37, 4),
                        {{"epsMaxDeg", eps_max}, {"epsMinDeg", eps_min}});
    default:
      throw std::invalid_argument("not a legacy bound: " + std::string(to_string(which)));
  }
}

Rational lower_bound_chain(const GraphParams& p, std::uint64_t k) {
  validate(p);
  if (!p.girth) throw std::domain_error("chain lower bound needs a girth");
  if (k == 0) throw std::domain_error("chain needs at least one copy");
  const std::uint32_t g = *p.girth;
  const bool odd = g % 2 == 1;
  const Rational order =
      odd ? moore_order_odd(p.min_degree, g) : moore_order_even(p.min_degree, g);
  const Rational n = integer(p.n);
  if (n != order * integer(k)) {
    throw std::domain_error("n = " + std::to_string(p.n) + " is not " +
                            std::to_string(k) + " times the Moore order " +
                            to_fraction(order));
  }
  const Rational gg = integer(g);
  Rational v = 3 * gg * n / (4 * order) - gg + (odd ? Rational(1, 2) : Rational(3, 2));
  v.canonicalize();
  return v;
}

std::vector<BoundResult> evaluate_all(const GraphParams& p, const Rational& avec) {
  std::vector<BoundResult> out;
  for (BoundId id : legacy_bound_ids()) out.push_back(bound_legacy(p, id));
  out.push_back(bound_thm_girth(p));
  out.push_back(bound_thm_girth_maxdeg(p));
  for (auto& r : out) {
    if (r.applicable) r.satisfied = avec <= *r.value;
  }
  return out;
}

std::vector<BoundResult> evaluate_all(const Graph& g) {
  const auto profile = eccentricity_profile(g);
  return evaluate_all(measure(g), profile.avec);
}

}  // namespace eccb
