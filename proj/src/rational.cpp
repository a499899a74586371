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

#include "kakeya/rational.hpp"

#include <cctype>

namespace kakeya {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q{Integer{std::to_string(num)}, Integer{std::to_string(den)}};
  q.canonicalize();
  return q;
}

Rational pow2(long e) {
  Integer p{1};
  const unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n);
  return e < 0 ? Rational{Integer{1}, p} : Rational{p};
}

Rational pow4(long e) {
  if (e < 0) throw std::invalid_argument("pow4: negative exponent");
  return pow2(2 * e);
}

std::string to_text(const Rational& q) {
  // mpq get_str already prints "p" when the denominator is 1.
  return q.get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  Integer z{std::string(s)};
  return neg ? Integer{-z} : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("malformed rational: empty");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    Integer den{std::string(den_text)};
    if (den == 0) throw ParseError("malformed rational: zero denominator in '" + std::string(text) + "'");
    Rational q{num, den};
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((int_part.empty() && frac.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    Integer scale{1};
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer whole = int_part.empty() ? Integer{0} : Integer{std::string(int_part)};
    Integer f = frac.empty() ? Integer{0} : Integer{std::string(frac)};
    Integer num = whole * scale + f;
    Rational q{neg ? Integer{-num} : num, scale};
    q.canonicalize();
    return q;
  }
  return Rational{parse_integer(text, text)};
}

Integer floor(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

double approx(const Rational& q) { return q.get_d(); }

}  // namespace kakeya
