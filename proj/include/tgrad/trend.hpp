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

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "tgrad/density.hpp"

namespace tgrad {

struct TrendPoint {
  std::size_t n = 0;
  Rational value;
  bool exact = true;
};

// Finite-sample growth estimate of a density measure along a graph family.
// A slope near zero is consistent with subpolynomial growth at the sampled
// sizes; it proves nothing about the limit.
struct TrendEstimate {
  std::size_t k = 0;
  Measure measure = Measure::kNabla;
  std::vector<TrendPoint> points;
  std::size_t fitted_points = 0;  // points with value >= 1 used in the fit
  double slope = 0.0;             // least-squares slope of log(value) vs log(n)
  std::string hint;
};

inline constexpr double kSubpolynomialSlope = 0.25;

/// Least-squares slope of log(value) against log(n) over points with value >= 1.
/// Returns 0 when fewer than two such points (or only one distinct n) remain.
inline double log_log_slope(const std::vector<TrendPoint>& points, std::size_t* used = nullptr) {
  std::vector<double> xs, ys;
  for (const TrendPoint& p : points) {
    if (p.value < 1) continue;
    xs.push_back(std::log(static_cast<double>(p.n)));
    ys.push_back(std::log(p.value.convert_to<double>()));
  }
  if (used != nullptr) *used = xs.size();
  if (xs.size() < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx == 0 ? 0.0 : sxy / sxx;
}

inline TrendEstimate family_trend(const std::vector<Graph>& family, std::size_t k,
                                  Measure measure = Measure::kNabla,
                                  const SearchLimits& limits = {}) {
  std::set<std::size_t> sizes;
  for (const Graph& g : family) sizes.insert(g.order());
  require(sizes.size() >= 3, ErrorKind::kInvalidInput,
          "trend estimation needs at least three family members of distinct sizes");
  TrendEstimate out;
  out.k = k;
  out.measure = measure;
  for (const Graph& g : family) {
    DensityReport r = density_measure(g, measure, k, limits);
    out.points.push_back({g.order(), r.value, r.exact});
  }
  out.slope = log_log_slope(out.points, &out.fitted_points);
  out.hint = out.slope < kSubpolynomialSlope ? "consistent-with-subpolynomial (finite-sample heuristic)"
                                             : "polynomial-growth-suspected (finite-sample heuristic)";
  return out;
}

}  // namespace tgrad
