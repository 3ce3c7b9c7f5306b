// Copyright 2026 The tgrad Authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "tgrad/errors.hpp"

namespace tgrad {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

inline BigInt pow_int(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline BigInt ceil_rational(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (q * den != num && num > 0) q += 1;
  return q;
}

inline BigInt floor_rational(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (q * den != num && num < 0) q -= 1;
  return q;
}

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

// "p" or "p/q" in lowest terms; the format is lossless for any magnitude.
inline std::string to_decimal_string(const Rational& value) { return value.str(); }
inline std::string to_decimal_string(const BigInt& value) { return value.str(); }

inline Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorKind::kInvalidInput, "empty rational literal");
  std::size_t slash = text.find('/');
  auto check_digits = [&](std::string_view part) {
    std::size_t start = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (part.size() == start) fail(ErrorKind::kInvalidInput, "bad rational literal '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        fail(ErrorKind::kInvalidInput, "bad rational literal '" + text + "'");
      }
    }
  };
  if (slash == std::string::npos) {
    check_digits(text);
    return Rational(BigInt(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  check_digits(num);
  check_digits(den);
  BigInt d(den);
  if (d == 0) fail(ErrorKind::kInvalidInput, "zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

inline BigInt parse_bigint(const std::string& text) {
  Rational r = parse_rational(text);
  if (!is_integer(r)) fail(ErrorKind::kInvalidInput, "expected an integer, got '" + text + "'");
  return boost::multiprecision::numerator(r);
}

}  // namespace tgrad
