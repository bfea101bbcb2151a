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

#include "eccb/rational.hpp"

#include <climits>
#include <stdexcept>

namespace eccb {

namespace {

Integer from_int64(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through strings
  // only when the value does not fit a long.
  if (v >= LONG_MIN && v <= LONG_MAX) return Integer(static_cast<long>(v));
  return Integer(std::to_string(v));
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(from_int64(num), from_int64(den));
  q.canonicalize();
  return q;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ipow(std::uint64_t base, std::uint64_t exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

std::string to_fraction(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, unsigned digits) {
  Integer scale = ipow(10, digits);
  Rational scaled = abs(q) * scale;
  // round half away from zero
  Integer rounded = floor(scaled + Rational(1, 2));
  std::string body = rounded.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out;
  if (sgn(q) < 0 && rounded != 0) out.push_back('-');
  out.append(body, 0, body.size() - digits);
  if (digits > 0) {
    out.push_back('.');
    out.append(body, body.size() - digits, digits);
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

}  // namespace eccb
