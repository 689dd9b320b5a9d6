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

#include <vector>

#include "vlineq/lattice.hpp"
#include "vlineq/report.hpp"

namespace vlineq {

/// Weights r_1..r_n with each r_k in (0,1) and sum 1 (within tol).
/// The degenerate n=1 case admits r_1 = 1, where the weighted geometric
/// mean collapses to the modulus.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights, double tol = 1e-9);
  const std::vector<double>& weights() const { return weights_; }
  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int k) const { return weights_[static_cast<std::size_t>(k)]; }

 private:
  std::vector<double> weights_;
};

/// r split as floor(r) + fractional part.
struct ExponentDecomposition {
  double r = 0.0;
  int floor_part = 0;
  double frac_part = 0.0;
};

ExponentDecomposition decompose_exponent(double r);

/// Coordinatewise product; the multiplicative unit is the all-ones element.
LatticeElement multiply(const LatticeElement& a, const LatticeElement& b);

/// Coordinatewise nonnegative real n-th root of a positive element.
LatticeElement nth_root(const LatticeElement& a, int n);

/// Closed-form a^r (coordinatewise pow, 0^r = 0) for positive a, r > 0.
LatticeElement power_closed(const LatticeElement& a, double r);

/// a^r for positive a and real r > 0.
///
/// Definitional path: with r = floor(r) + s, the fractional factor is the
/// infimum of s t a + (1-s) t^(-s/(1-s)) e over the log grid of t with convex
/// refinement (the exponent pair keeps t1^s t2^(1-s) = 1), multiplied by the
/// repeated-product a^floor(r); integer r bypasses the infimum. Closed path:
/// coordinatewise pow.
DualValue power(const LatticeElement& a, double r, const GridConfig& cfg);

/// Weighted geometric mean of arbitrary (also complex) elements: moduli are
/// taken first. Definitional path: infimum of sum_k r_k t_k |f_k| over the
/// constraint manifold prod t_k^{r_k} = 1, sampled on the log grid for the
/// free parameters and refined by coordinate descent (every one-dimensional
/// slice is convex). Closed path: coordinatewise prod |f_k|^{r_k}.
DualValue weighted_geometric_mean(const std::vector<LatticeElement>& fs,
                                  const WeightVector& w, const GridConfig& cfg);

/// Closed path only (same canonical evaluation order, no grid work); this is
/// what inequality checks compare against.
LatticeElement weighted_geometric_mean_closed(
    const std::vector<LatticeElement>& fs, const WeightVector& w);

/// Checks (a^p)^q = a^{pq} and a^p a^q = a^{p+q} on the closed forms.
/// Violations are scaled by 1 + the largest magnitude involved.
CheckReport check_power_rules(const LatticeElement& a, double p, double q,
                              const GridConfig& cfg);

}  // namespace vlineq
