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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tgrad/graph.hpp"
#include "tgrad/numeric.hpp"

namespace tgrad {

inline BigInt two_pow(unsigned e) { return BigInt(1) << e; }

/// r raised to max(r, 2^25, s+1, ceil(sk/2)), the smallest value for which the
/// lemma's argument goes through.
inline BigInt raised_r(const BigInt& r, std::size_t k, const BigInt& s) {
  BigInt sk = s * k;
  BigInt half_up = (sk + 1) / 2;
  return std::max({r, two_pow(25), BigInt(s + 1), half_up});
}

/// d_{r,k,s} = r^11 (sk+1) / 2^6, with r raised first unless `relaxed`.
inline Rational d_constant(const BigInt& r, std::size_t k, const BigInt& s, bool relaxed) {
  require(r >= 1 && s >= 1 && k >= 1, ErrorKind::kInvalidInput, "d_{r,k,s} needs r, k, s >= 1");
  BigInt base = relaxed ? r : raised_r(r, k, s);
  return Rational(pow_int(base, 11) * (s * k + 1), BigInt(64));
}

struct BoundRow {
  std::size_t k = 0;
  std::optional<std::size_t> n;  // set for tables indexed by (k, n)
  Rational value;
  std::string provenance;
};

struct BoundTable {
  std::string kind;  // "bexp", "nd", "main1_f"
  std::vector<BoundRow> rows;
};

/// g(0) = f(0); g(k) = g(k-1) + d_{f(k)+1, k, f(0)} (strict constants).
inline BoundTable bexp_bound_table(const std::vector<BigInt>& f, std::size_t k_max) {
  require(f.size() > k_max, ErrorKind::kInvalidInput, "f must be defined on 0..k_max");
  require(f[0] >= 1, ErrorKind::kInvalidInput, "f(0) plays the role of s and must be positive");
  for (const BigInt& v : f) require(v >= 0, ErrorKind::kInvalidInput, "f must be non-negative");
  BoundTable table;
  table.kind = "bexp";
  Rational g = f[0];
  table.rows.push_back({0, std::nullopt, g, "g(0)=f(0)"});
  for (std::size_t k = 1; k <= k_max; ++k) {
    BigInt r = f[k] + 1;
    Rational d = d_constant(r, k, f[0], false);
    g += d;
    table.rows.push_back({k, std::nullopt, g,
                          "g(" + std::to_string(k) + ")=g(" + std::to_string(k - 1) + ")+d(r=" +
                              r.str() + ",k=" + std::to_string(k) + ",s=" + f[0].str() + ")"});
  }
  return table;
}

/// Per-size version: g(0,n) = f(0,n); g(k,n) = g(k-1,n) + d_{f(k,n)+1, k, f(0,n)}.
/// `f[k][i]` is f(k, sizes[i]). Each f(k, .) is first made non-decreasing in n
/// by a running maximum over increasing sizes.
inline BoundTable nd_bound_function(const std::vector<std::vector<BigInt>>& f, std::size_t k_max,
                                    const std::vector<std::size_t>& sizes) {
  BoundTable table;
  table.kind = "nd";
  if (sizes.empty()) return table;
  require(f.size() > k_max, ErrorKind::kInvalidInput, "f must be defined for k = 0..k_max");
  for (const auto& row : f) {
    require(row.size() == sizes.size(), ErrorKind::kInvalidInput,
            "each f(k, .) row needs one value per size");
  }
  std::vector<std::size_t> order(sizes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
  std::vector<std::vector<BigInt>> mono(k_max + 1, std::vector<BigInt>(sizes.size()));
  for (std::size_t k = 0; k <= k_max; ++k) {
    BigInt running = 0;
    for (std::size_t idx : order) {
      require(f[k][idx] >= 0, ErrorKind::kInvalidInput, "f must be non-negative");
      running = std::max(running, f[k][idx]);
      mono[k][idx] = running;
    }
  }
  for (std::size_t idx : order) {
    const BigInt& s = mono[0][idx];
    require(s >= 1, ErrorKind::kInvalidInput, "f(0,n) plays the role of s and must be positive");
    Rational g = s;
    const std::size_t n = sizes[idx];
    table.rows.push_back({0, n, g, "g(0,n)=f(0,n)"});
    for (std::size_t k = 1; k <= k_max; ++k) {
      BigInt r = mono[k][idx] + 1;
      g += d_constant(r, k, s, false);
      table.rows.push_back({k, n, g,
                            "g(" + std::to_string(k) + ",n)=g(" + std::to_string(k - 1) +
                                ",n)+d(r=" + r.str() + ",k=" + std::to_string(k) + ",s=" + s.str() + ")"});
    }
  }
  return table;
}

/// f(0) = d and f(k) = c n^2 for k >= 1, with n = |V(H)|. The constants c and
/// d are inputs; no numeric value for either is implied.
inline std::vector<Rational> main1_bound_f(const Graph& h, const BigInt& s, const Rational& c,
                                           const BigInt& d, std::size_t k_max) {
  require(s >= 1, ErrorKind::kInvalidInput, "s must be positive");
  require(c > 0, ErrorKind::kInvalidInput, "c must be positive");
  require(d >= 1, ErrorKind::kInvalidInput, "d must be positive (it bounds f(0) = s in the recurrence)");
  const Rational n = Rational(h.order());
  std::vector<Rational> f;
  f.push_back(Rational(d));
  for (std::size_t k = 1; k <= k_max; ++k) f.push_back(c * n * n);
  return f;
}

inline BoundTable main1_f_table(const std::vector<Rational>& f) {
  BoundTable table;
  table.kind = "main1_f";
  for (std::size_t k = 0; k < f.size(); ++k) {
    table.rows.push_back({k, std::nullopt, f[k], k == 0 ? "f(0)=d" : "f(k)=c*n^2"});
  }
  return table;
}

/// Integer f for the bounded-expansion recurrence: ceilings of a rational f
/// (a ceiling of an upper bound is still an upper bound).
inline std::vector<BigInt> ceil_all(const std::vector<Rational>& f) {
  std::vector<BigInt> out;
  for (const Rational& v : f) out.push_back(ceil_rational(v));
  return out;
}

}  // namespace tgrad
