/*
 *   Copyright 2026 the vlineq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace vlineq::detail {

inline constexpr double kThetaLogMin = -6.0;  // grid covers [1e-6, 1e6]
inline constexpr double kThetaLogMax = 6.0;
inline constexpr double kLn10 = 2.302585092994045684017991;
inline constexpr double kTwoPi = 6.283185307179586476925287;

/// Natural-log positions of the multiplicative grid: steps+1 samples with
/// decimal exponents -6 + 12 k/steps. Doubling `steps` keeps every sample.
inline std::vector<double> log_grid(int steps) {
  std::vector<double> u(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k)
    u[static_cast<std::size_t>(k)] =
        (kThetaLogMin + 12.0 * k / steps) * kLn10;
  return u;
}

/// Multiplicative grid itself: exp of log_grid, computed once per call site.
inline std::vector<double> exp_grid(const std::vector<double>& u) {
  std::vector<double> t(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) t[i] = std::exp(u[i]);
  return t;
}

/// Uniform angles 2 pi k / points, k = 0..points-1. Nests under doubling.
inline std::vector<double> angle_grid(int points) {
  std::vector<double> a(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k)
    a[static_cast<std::size_t>(k)] = kTwoPi * k / points;
  return a;
}

/// Ternary search for the minimum of a function convex on [lo, hi].
/// Returns the smallest value evaluated, endpoints included.
template <class F>
double ternary_min(F&& h, double lo, double hi, int iters) {
  double best = std::min(h(lo), h(hi));
  for (int i = 0; i < iters; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    const double v1 = h(m1);
    const double v2 = h(m2);
    best = std::min(best, std::min(v1, v2));
    if (v1 < v2)
      hi = m2;
    else
      lo = m1;
  }
  return best;
}

/// Sample count of the fixed refinement stage shared by every search below.
/// The refinement scans this many canonical samples and ternary-searches the
/// winning bracket, so its value depends only on the objective, never on the
/// caller's grid. min(grid scan, refinement) therefore improves exactly,
/// bit for bit, whenever the caller's grid count is doubled: the doubled
/// grid keeps every old sample and the refinement term does not move.
inline constexpr int kRefineSteps = 256;

/// Grid-independent refinement for an objective g(u) that is unimodal in
/// u = log t over the full multiplicative range.
template <class F>
double log_refine_u(F&& g, int iters) {
  static const std::vector<double> us = log_grid(kRefineSteps);
  std::size_t best = 0;
  double vbest = g(us[0]);
  for (std::size_t i = 1; i < us.size(); ++i) {
    const double v = g(us[i]);
    if (v < vbest) {
      vbest = v;
      best = i;
    }
  }
  const double lo = us[best > 0 ? best - 1 : 0];
  const double hi = us[best + 1 < us.size() ? best + 1 : us.size() - 1];
  return std::min(vbest, ternary_min(g, lo, hi, iters));
}

/// Grid-independent refinement for a 2 pi periodic objective that is
/// unimodal on the circle. Brackets may leave [0, 2 pi).
template <class F>
double angle_refine(F&& h, int iters) {
  static const std::vector<double> angles = angle_grid(kRefineSteps);
  std::size_t best = 0;
  double vbest = h(angles[0]);
  for (std::size_t i = 1; i < angles.size(); ++i) {
    const double v = h(angles[i]);
    if (v < vbest) {
      vbest = v;
      best = i;
    }
  }
  const double step = angles[1] - angles[0];
  return std::min(vbest,
                  ternary_min(h, angles[best] - step, angles[best] + step,
                              iters));
}

/// Minimum of h over the multiplicative grid ts, combined with the fixed
/// refinement stage. h is expected to be convex in log t.
template <class F>
double log_grid_min(const std::vector<double>& ts, F&& h, int iters) {
  double vbest = h(ts[0]);
  for (std::size_t i = 1; i < ts.size(); ++i) vbest = std::min(vbest, h(ts[i]));
  const double refined =
      log_refine_u([&h](double u) { return h(std::exp(u)); }, iters);
  return std::min(vbest, refined);
}

/// Minimum of h over a uniform angle grid, combined with the fixed
/// refinement stage. h must be 2 pi periodic.
template <class F>
double angle_grid_min(const std::vector<double>& angles, F&& h, int iters) {
  double vbest = h(angles[0]);
  for (std::size_t i = 1; i < angles.size(); ++i)
    vbest = std::min(vbest, h(angles[i]));
  return std::min(vbest, angle_refine(h, iters));
}

}  // namespace vlineq::detail
