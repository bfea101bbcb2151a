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

#ifndef ECCB_RATIONAL_HPP_
#define ECCB_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eccb {

// All eccentricity averages and bound values are exact.  Floating point only
// shows up when a value is rendered for humans.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms.  Throws std::domain_error on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer ceil(const Rational& q);
Integer floor(const Rational& q);

// base^exp for small non-negative integers, exact.
Integer ipow(std::uint64_t base, std::uint64_t exp);

// "p/q", or "p" when the denominator is 1.
std::string to_fraction(const Rational& q);

// Fixed-point decimal rounded half away from zero, e.g. "3.200000".
std::string to_decimal(const Rational& q, unsigned digits = 6);

// Parses "p/q" or "p".  Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace eccb

#endif  // ECCB_RATIONAL_HPP_
