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

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "vlineq/lattice.hpp"
#include "vlineq/power.hpp"
#include "vlineq/report.hpp"

namespace vlineq {

/// Positive linear map between coordinatewise lattices: a matrix with
/// nonnegative real entries, applied to real and imaginary parts separately.
class PositiveLinearMap {
 public:
  explicit PositiveLinearMap(Eigen::MatrixXd entries);

  int in_dim() const { return static_cast<int>(entries_.cols()); }
  int out_dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }

  /// At most one strictly positive entry per row: exactly the maps that
  /// preserve joins and meets.
  bool is_lattice_homomorphism() const;

 private:
  Eigen::MatrixXd entries_;
};

/// Exponents p_1..p_n, each in (1, inf), with sum 1/p_k = 1 (within tol).
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<double> exponents, double tol = 1e-9);
  const std::vector<double>& exponents() const { return exponents_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  double operator[](int k) const { return exponents_[static_cast<std::size_t>(k)]; }
  /// The conjugate weights 1/p_k.
  std::vector<double> reciprocals() const;

 private:
  std::vector<double> exponents_;
};

LatticeElement apply(const PositiveLinearMap& map, const LatticeElement& a);

/// T(wgm(f_k, r_k)) <= wgm(T(|f_k|), r_k) for a positive linear map T.
CheckReport maligranda_check(const PositiveLinearMap& map,
                             const std::vector<LatticeElement>& fs,
                             const WeightVector& w, const GridConfig& cfg);

/// Under the homomorphism predicate asserts equality
/// T(wgm(f_k, r_k)) = wgm(T(f_k), r_k); otherwise this single instance
/// asserts only the positive-map inequality (strictness is witnessed by
/// strictness_witness_search).
CheckReport homomorphism_equality_check(const PositiveLinearMap& map,
                                        const std::vector<LatticeElement>& fs,
                                        const WeightVector& w,
                                        const GridConfig& cfg);

struct StrictnessWitness {
  std::vector<LatticeElement> elements;
  std::vector<double> weights;
  /// Largest coordinate of rhs - lhs at the witness.
  double margin = 0.0;
};

/// Seeded random search for an instance where the inequality above is
/// strict. Requires a map that is NOT a lattice homomorphism.
std::optional<StrictnessWitness> strictness_witness_search(
    const PositiveLinearMap& map, int trials, std::uint64_t seed,
    const GridConfig& cfg);

/// T(prod |a_k|) <= prod (T(|a_k|^{p_k}))^{1/p_k}, checked both as the
/// product of roots (form 1) and through the weighted geometric mean with
/// weights 1/p_k (form 2); the two right-hand sides must agree.
CheckReport holder_check(const PositiveLinearMap& map,
                         const std::vector<LatticeElement>& as,
                         const ExponentVector& p, const GridConfig& cfg);

/// (T(|sum a_k|^p))^{1/p} <= sum_k (T(|a_k|^p))^{1/p} for p > 1.
CheckReport minkowski_check(const PositiveLinearMap& map,
                            const std::vector<LatticeElement>& as, double p,
                            const GridConfig& cfg);

}  // namespace vlineq
