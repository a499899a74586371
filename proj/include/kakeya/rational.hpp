// Copyright 2026 The Kakeya Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KAKEYA_RATIONAL_HPP
#define KAKEYA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kakeya {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so equality is structural.
///
/// Note: arithmetic on mpq_class builds expression templates; always
/// materialize into a `Rational` rather than `auto`.
using Rational = mpq_class;
using Integer = mpz_class;

/// Malformed textual rational (bad digits, zero denominator).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// 2^e for any integer e (negative allowed).
Rational pow2(long e);

/// 4^e, e >= 0.
Rational pow4(long e);

/// Canonical text form: "p/q", or "p" when q == 1. Sign on the numerator.
std::string to_text(const Rational& q);

/// Parses "p", "p/q" or a finite decimal such as "-0.125". Whitespace is
/// not accepted. The result is canonical.
Rational parse_rational(std::string_view text);

/// floor(q) as an integer.
Integer floor(const Rational& q);

/// Rendering-only conversion. Never feed the result back into geometry.
double approx(const Rational& q);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace kakeya

#endif  // KAKEYA_RATIONAL_HPP
