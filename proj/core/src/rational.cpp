// Copyright 2026 The srglab Authors
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

#include "srglab/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace srglab {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

BigInt pow10(long exp) {
  BigInt r = 1;
  for (long i = 0; i < exp; ++i) r *= 10;
  return r;
}

}  // namespace

std::string to_decimal(const Rational& x, int digits) {
  if (x == 0) return "0";
  Decimal num(boost::multiprecision::numerator(x).str());
  Decimal den(boost::multiprecision::denominator(x).str());
  Decimal q = num / den;
  std::string s = q.str(digits, std::ios_base::fmtflags(0));
  return s;
}

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    return num / den;
  }
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view ex = text.substr(e + 1);
    bool neg_exp = false;
    if (!ex.empty() && (ex.front() == '-' || ex.front() == '+')) {
      neg_exp = ex.front() == '-';
      ex.remove_prefix(1);
    }
    exponent = static_cast<long>(parse_integer(ex, whole));
    if (exponent > 60) throw std::invalid_argument("exponent too large in '" + std::string(whole) + "'");
    if (neg_exp) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    frac_len = static_cast<long>(text.size() - dot - 1);
    if (dot == 0 && frac_len == 0) throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  } else {
    digits = std::string(text);
  }
  Rational value(parse_integer(digits, whole));
  const long shift = exponent - frac_len;
  if (shift >= 0)
    value *= pow10(shift);
  else
    value /= pow10(-shift);
  return negative ? Rational(-value) : value;
}

BigInt floor(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace srglab
