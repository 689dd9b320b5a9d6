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

#include <complex>
#include <string>
#include <vector>

namespace vlineq {

enum class ScalarField { real, complex };

std::string to_string(ScalarField field);
ScalarField field_from_string(const std::string& name);

/// Resolution and tolerances for the optimization-based evaluation paths.
///
/// theta_points is the number of logarithmic steps covering [1e-6, 1e6];
/// the grid holds theta_points + 1 samples whose exponents are k/N, so
/// doubling the step count keeps every existing sample and refinement is
/// monotone by construction. lambda_points is the number of uniform angles
/// on the unit circle; over the real field the circle degenerates to
/// {+1, -1} regardless of lambda_points. refine_iters bounds the ternary
/// search that polishes each per-coordinate optimum.
struct GridConfig {
  int theta_points = 4096;
  int lambda_points = 1024;
  int refine_iters = 60;
  double abs_tol = 1e-9;
  double grid_tol = 1e-4;
};

/// One element of a finite coordinatewise lattice over R or C.
///
/// Coordinates are stored as complex pairs even over the real field; the
/// real tag guarantees every imaginary part is exactly zero.
class LatticeElement {
 public:
  LatticeElement(ScalarField field, std::vector<std::complex<double>> coords);

  static LatticeElement zeros(ScalarField field, int dim);
  /// Multiplicative unit: every coordinate 1.
  static LatticeElement unit(ScalarField field, int dim);
  static LatticeElement from_real(std::vector<double> coords);

  ScalarField field() const { return field_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::complex<double>>& coords() const { return coords_; }
  std::complex<double> operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  /// True when every imaginary part is zero (elements of the real part of
  /// the lattice; the order lives there).
  bool is_real_valued() const;
  /// Real-valued with every coordinate >= 0.
  bool in_positive_cone() const;

  bool operator==(const LatticeElement& other) const = default;

 private:
  ScalarField field_;
  std::vector<std::complex<double>> coords_;
};

/// Result of an operation evaluated both by its optimization-based
/// definition and by its closed form.
struct DualValue {
  LatticeElement definitional;
  LatticeElement closed;
};

// ---- order operations (real field only) ----

LatticeElement join(const LatticeElement& f, const LatticeElement& g);
LatticeElement meet(const LatticeElement& f, const LatticeElement& g);

// ---- linear-space plumbing ----

LatticeElement add(const LatticeElement& f, const LatticeElement& g);
LatticeElement subtract(const LatticeElement& f, const LatticeElement& g);
LatticeElement negate(const LatticeElement& f);
/// Coordinatewise scalar multiple. A complex scalar requires a complex element.
LatticeElement scale(std::complex<double> z, const LatticeElement& f);
/// Coordinatewise real part, imaginary parts zeroed; the field tag is kept.
LatticeElement real_part(const LatticeElement& f);
LatticeElement imag_part(const LatticeElement& f);
/// f + i g from two real-field elements of equal dimension.
LatticeElement complexify(const LatticeElement& f, const LatticeElement& g);
/// Coordinatewise max(re, 0); input must be real-valued.
LatticeElement positive_clamp(const LatticeElement& f);

/// max_j (re f_j - re g_j) for real-valued f, g: positive iff f <= g fails.
double max_exceedance(const LatticeElement& f, const LatticeElement& g);
/// Largest coordinate magnitude.
double max_magnitude(const LatticeElement& f);
/// max_j |f_j - g_j| for elements of the same shape.
double max_distance(const LatticeElement& f, const LatticeElement& g);

// ---- lattice operations with dual evaluation paths ----

/// Absolute value. Definitional path: per coordinate, the best value of
/// Re(lambda * z) over the unit-circle grid ({+1,-1} over the reals),
/// polished by ternary search in the angle. Closed path: |z| coordinatewise.
DualValue modulus(const LatticeElement& f, const GridConfig& cfg);

/// Square mean of two real-field elements. Definitional path: per
/// coordinate, sup over the angle grid of cos(t) f + sin(t) g, refined.
/// Closed path: sqrt(f^2 + g^2). Matches modulus(f + i g) exactly on the
/// closed path.
DualValue square_mean(const LatticeElement& f, const LatticeElement& g,
                      const GridConfig& cfg);

/// Geometric mean of two positive elements. Definitional path: per
/// coordinate, half the infimum of t x + y/t over the log grid, refined
/// (the map is convex on (0, inf)). Closed path: sqrt(x y).
DualValue geometric_mean(const LatticeElement& f, const LatticeElement& g,
                         const GridConfig& cfg);

}  // namespace vlineq
