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
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "vlineq/lattice.hpp"
#include "vlineq/report.hpp"

namespace vlineq {

/// Coordinate gap below which a Cauchy-Schwarz instance counts as equality.
inline constexpr double kEqualityTol = 1e-6;

/// Vector-valued positive sesquilinear form on K^m with values in K^n:
/// one Hermitian m x m matrix per output coordinate,
/// T(u, v)_j = sum_{p,q} A_j[p][q] u_p conj(v_q).
class SesquilinearForm {
 public:
  SesquilinearForm(ScalarField field, std::vector<Eigen::MatrixXcd> matrices);

  ScalarField field() const { return field_; }
  int domain_dim() const { return static_cast<int>(matrices_[0].rows()); }
  int codomain_dim() const { return static_cast<int>(matrices_.size()); }
  const std::vector<Eigen::MatrixXcd>& matrices() const { return matrices_; }

  bool is_conjugate_symmetric(double tol) const;
  /// Every matrix has smallest eigenvalue >= -tol.
  bool is_positive_semidefinite(double tol) const;

 private:
  ScalarField field_;
  std::vector<Eigen::MatrixXcd> matrices_;
};

/// T(u, v). Accumulation pairs the (p,q)/(q,p) terms so that conjugate
/// symmetry is bitwise exact for bitwise-Hermitian families.
LatticeElement evaluate(const SesquilinearForm& form, const LatticeElement& u,
                        const LatticeElement& v);

/// The infimum over z != 0 of |z|^{-1} T(zu - v, zu - v), coordinatewise.
///
/// Definitional path: with z = t * lambda, the quadratic expansion
/// t T(u,u) + t^{-1} T(v,v) - 2 Re(lambda T(u,v)) separates the search into
/// the log grid over t and the unit-circle grid over lambda, each refined
/// per coordinate. Closed path: 2 (sqrt(T(u,u) T(v,v)) - |T(u,v)|).
/// Requires a Hermitian positive-semidefinite family.
DualValue cs_gap(const SesquilinearForm& form, const LatticeElement& u,
                 const LatticeElement& v, const GridConfig& cfg);

/// Verdict on the lattice Cauchy-Schwarz identity for one (T, u, v).
struct CauchySchwarzReport {
  LatticeElement lhs;  ///< |T(u,v)|
  LatticeElement rhs;  ///< geometric mean of T(u,u) and T(v,v)
  LatticeElement gap;  ///< definitional gap
  /// max coordinate of | lhs - (rhs - gap/2) |, gap taken definitionally.
  double identity_residual = 0.0;
  /// True when the closed-form gap (the exact infimum, free of grid error)
  /// vanishes coordinatewise within kEqualityTol.
  bool equality = false;
};

CauchySchwarzReport cauchy_schwarz_report(const SesquilinearForm& form,
                                          const LatticeElement& u,
                                          const LatticeElement& v,
                                          const GridConfig& cfg);

/// Squared, product-form version of the same identity:
/// |T(u,v)|^2 = (sqrt(T(u,u) T(v,v)) - gap/2)^2 and
/// |T(u,v)|^2 <= T(u,u) T(v,v), products in the algebra.
CheckReport cs_corollary_report(const SesquilinearForm& form,
                                const LatticeElement& u,
                                const LatticeElement& v, const GridConfig& cfg);

/// Searches scalars (alpha, beta), not both zero, with
/// T(beta u + alpha v, beta u + alpha v) = 0: a classical equality witness.
/// Probes a magnitude/phase grid of about probe_count scalars, the
/// analytically aligned candidates from the per-coordinate minimizers, and a
/// small seeded random tail. Equality of the lattice identity does NOT imply
/// such a witness exists.
std::optional<std::pair<std::complex<double>, std::complex<double>>>
classical_equality_witness_search(const SesquilinearForm& form,
                                  const LatticeElement& u,
                                  const LatticeElement& v, int probe_count,
                                  std::uint64_t seed, const GridConfig& cfg);

}  // namespace vlineq
