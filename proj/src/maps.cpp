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

#include "vlineq/maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vlineq/rng.hpp"
#include "vlineq/sesquilinear.hpp"

namespace vlineq {

namespace {

void require_family_shape(const PositiveLinearMap& m,
                          const std::vector<LatticeElement>& fs,
                          const char* op) {
  if (fs.empty()) throw std::invalid_argument(std::string(op) + ": empty family");
  for (const auto& f : fs) {
    if (f.dim() != m.in_dim())
      throw std::invalid_argument(std::string(op) + ": dimension mismatch");
    if (f.field() != fs[0].field())
      throw std::invalid_argument(std::string(op) + ": field mismatch");
  }
}

LatticeElement closed_modulus(const LatticeElement& f) {
  GridConfig cfg;  // the closed path ignores the grid
  return modulus(f, cfg).closed;
}

std::vector<LatticeElement> mapped_moduli(const PositiveLinearMap& m,
                                          const std::vector<LatticeElement>& fs) {
  std::vector<LatticeElement> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(apply(m, closed_modulus(f)));
  return out;
}

}  // namespace

PositiveLinearMap::PositiveLinearMap(Eigen::MatrixXd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.cols() < 1)
    throw std::invalid_argument("PositiveLinearMap: empty matrix");
  for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
    for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
      const double e = entries_(r, c);
      if (!std::isfinite(e))
        throw std::invalid_argument("PositiveLinearMap: entries must be finite");
      if (e < 0.0)
        throw std::invalid_argument(
            "PositiveLinearMap: entries must be nonnegative");
    }
  }
}

bool PositiveLinearMap::is_lattice_homomorphism() const {
  for (Eigen::Index r = 0; r < entries_.rows(); ++r) {
    int positive = 0;
    for (Eigen::Index c = 0; c < entries_.cols(); ++c)
      if (entries_(r, c) > 0.0) ++positive;
    if (positive > 1) return false;
  }
  return true;
}

LatticeElement apply(const PositiveLinearMap& m, const LatticeElement& a) {
  if (a.dim() != m.in_dim())
    throw std::invalid_argument("apply: dimension mismatch");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(m.out_dim()));
  for (int r = 0; r < m.out_dim(); ++r) {
    double re = 0.0;
    double im = 0.0;
    for (int c = 0; c < m.in_dim(); ++c) {
      const double e = m.entries()(r, c);
      re += e * a[c].real();
      im += e * a[c].imag();
    }
    out[static_cast<std::size_t>(r)] = {re, a.field() == ScalarField::real
                                                ? 0.0
                                                : im};
  }
  return LatticeElement(a.field(), std::move(out));
}

CheckReport maligranda_check(const PositiveLinearMap& m,
                             const std::vector<LatticeElement>& fs,
                             const WeightVector& w, const GridConfig& cfg) {
  require_family_shape(m, fs, "maligranda_check");
  const LatticeElement lhs = apply(m, weighted_geometric_mean_closed(fs, w));
  const LatticeElement rhs =
      weighted_geometric_mean_closed(mapped_moduli(m, fs), w);
  const double exceed = max_exceedance(lhs, rhs);
  const double scale =
      1.0 + std::max(max_magnitude(lhs), max_magnitude(rhs));

  CheckReport rep;
  rep.check = "maligranda";
  rep.max_violation = std::max(exceed, 0.0);
  rep.pass = exceed <= cfg.abs_tol * scale;
  rep.details["exceedance"] = exceed;
  return rep;
}

CheckReport homomorphism_equality_check(const PositiveLinearMap& m,
                                        const std::vector<LatticeElement>& fs,
                                        const WeightVector& w,
                                        const GridConfig& cfg) {
  require_family_shape(m, fs, "homomorphism_equality_check");
  const LatticeElement lhs = apply(m, weighted_geometric_mean_closed(fs, w));
  const LatticeElement rhs =
      weighted_geometric_mean_closed(mapped_moduli(m, fs), w);
  const double scale =
      1.0 + std::max(max_magnitude(lhs), max_magnitude(rhs));

  CheckReport rep;
  rep.check = "hom-equality";
  if (m.is_lattice_homomorphism()) {
    const double dist = max_distance(lhs, rhs);
    rep.max_violation = dist;
    rep.pass = dist <= cfg.abs_tol * scale;
    rep.details["direction"] = "equality";
    rep.details["distance"] = dist;
  } else {
    // a single instance only witnesses one direction; strictness is searched
    // for separately
    const double exceed = max_exceedance(lhs, rhs);
    rep.max_violation = std::max(exceed, 0.0);
    rep.pass = exceed <= cfg.abs_tol * scale;
    rep.details["direction"] = "inequality-only";
    rep.details["exceedance"] = exceed;
  }
  return rep;
}

std::optional<StrictnessWitness> strictness_witness_search(
    const PositiveLinearMap& m, int trials, std::uint64_t seed,
    const GridConfig& cfg) {
  if (m.is_lattice_homomorphism())
    throw std::invalid_argument(
        "strictness_witness_search: map satisfies the homomorphism predicate");
  if (trials < 0)
    throw std::invalid_argument("strictness_witness_search: negative trials");

  int used = 0;
  const auto margin_of = [&](const std::vector<LatticeElement>& fs,
                             const WeightVector& w) {
    const LatticeElement lhs = apply(m, weighted_geometric_mean_closed(fs, w));
    const LatticeElement rhs =
        weighted_geometric_mean_closed(mapped_moduli(m, fs), w);
    return max_exceedance(rhs, lhs);
  };
  const auto found = [&](std::vector<LatticeElement> fs, WeightVector w,
                         double margin) {
    return StrictnessWitness{std::move(fs), w.weights(), margin};
  };

  // deterministic candidates: a disjoint pair on the first offending row
  for (int r = 0; r < m.out_dim() && used < trials; ++r) {
    int first = -1;
    int second = -1;
    for (int c = 0; c < m.in_dim(); ++c) {
      if (m.entries()(r, c) > 0.0) {
        if (first < 0)
          first = c;
        else {
          second = c;
          break;
        }
      }
    }
    if (second < 0) continue;
    for (const double amp : {1.0, 10.0}) {
      if (used >= trials) break;
      ++used;
      std::vector<double> c1(static_cast<std::size_t>(m.in_dim()), 0.0);
      std::vector<double> c2(static_cast<std::size_t>(m.in_dim()), 0.0);
      c1[static_cast<std::size_t>(first)] = amp;
      c2[static_cast<std::size_t>(second)] = amp;
      std::vector<LatticeElement> fs{LatticeElement::from_real(c1),
                                     LatticeElement::from_real(c2)};
      WeightVector w({0.5, 0.5});
      const double margin = margin_of(fs, w);
      if (margin > kEqualityTol) return found(std::move(fs), w, margin);
    }
  }

  Rng rng(seed);
  while (used < trials) {
    ++used;
    const int n = rng.uniform_int(2, 3);
    std::vector<LatticeElement> fs;
    for (int k = 0; k < n; ++k) {
      std::vector<double> coords(static_cast<std::size_t>(m.in_dim()));
      for (auto& x : coords)
        x = rng.unit() < 0.3 ? 0.0 : rng.uniform(0.0, 10.0);
      fs.push_back(LatticeElement::from_real(std::move(coords)));
    }
    std::vector<double> raw(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (auto& r : raw) {
      r = rng.uniform(0.05, 1.0);
      sum += r;
    }
    for (auto& r : raw) r /= sum;
    WeightVector w(raw, 1e-6);
    const double margin = margin_of(fs, w);
    if (margin > kEqualityTol) return found(std::move(fs), w, margin);
  }
  (void)cfg;
  return std::nullopt;
}

ExponentVector::ExponentVector(std::vector<double> exponents, double tol)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty())
    throw std::invalid_argument("ExponentVector: at least one exponent required");
  double sum = 0.0;
  for (const double p : exponents_) {
    if (!std::isfinite(p) || p <= 1.0)
      throw std::invalid_argument("ExponentVector: exponents must be > 1");
    sum += 1.0 / p;
  }
  if (std::fabs(sum - 1.0) > tol)
    throw std::invalid_argument("ExponentVector: reciprocals must sum to 1");
}

std::vector<double> ExponentVector::reciprocals() const {
  std::vector<double> r(exponents_.size());
  for (std::size_t k = 0; k < exponents_.size(); ++k) r[k] = 1.0 / exponents_[k];
  return r;
}

CheckReport holder_check(const PositiveLinearMap& m,
                         const std::vector<LatticeElement>& as,
                         const ExponentVector& p, const GridConfig& cfg) {
  require_family_shape(m, as, "holder_check");
  if (static_cast<int>(as.size()) != p.size())
    throw std::invalid_argument("holder_check: exponent count mismatch");

  std::vector<LatticeElement> mods;
  mods.reserve(as.size());
  for (const auto& a : as) mods.push_back(closed_modulus(a));

  LatticeElement prod = mods[0];
  for (std::size_t k = 1; k < mods.size(); ++k) prod = multiply(prod, mods[k]);
  const LatticeElement lhs = apply(m, prod);

  std::vector<LatticeElement> ts;
  ts.reserve(as.size());
  for (std::size_t k = 0; k < mods.size(); ++k)
    ts.push_back(apply(m, power_closed(mods[k], p[static_cast<int>(k)])));

  // form 1: plain product of the 1/p_k powers
  LatticeElement rhs1 = power_closed(ts[0], 1.0 / p[0]);
  for (std::size_t k = 1; k < ts.size(); ++k)
    rhs1 = multiply(rhs1, power_closed(ts[k], 1.0 / p[static_cast<int>(k)]));
  // form 2: the weighted geometric mean at the reciprocal weights
  const LatticeElement rhs2 =
      weighted_geometric_mean_closed(ts, WeightVector(p.reciprocals()));

  const double v1 = max_exceedance(lhs, rhs1);
  const double v2 = max_exceedance(lhs, rhs2);
  const double agree = max_distance(rhs1, rhs2);
  const double scale =
      1.0 + std::max({max_magnitude(lhs), max_magnitude(rhs1)});

  CheckReport rep;
  rep.check = "holder";
  rep.max_violation = std::max({v1, v2, 0.0});
  rep.pass = v1 <= cfg.abs_tol * scale && v2 <= cfg.abs_tol * scale &&
             agree <= cfg.abs_tol * scale;
  rep.details["product_form_exceedance"] = v1;
  rep.details["mean_form_exceedance"] = v2;
  rep.details["form_agreement"] = agree;
  return rep;
}

CheckReport minkowski_check(const PositiveLinearMap& m,
                            const std::vector<LatticeElement>& as, double p,
                            const GridConfig& cfg) {
  require_family_shape(m, as, "minkowski_check");
  if (!std::isfinite(p) || p <= 1.0)
    throw std::invalid_argument("minkowski_check: p must be > 1");

  LatticeElement total = as[0];
  for (std::size_t k = 1; k < as.size(); ++k) total = add(total, as[k]);
  const LatticeElement lhs =
      power_closed(apply(m, power_closed(closed_modulus(total), p)), 1.0 / p);

  LatticeElement rhs = power_closed(
      apply(m, power_closed(closed_modulus(as[0]), p)), 1.0 / p);
  for (std::size_t k = 1; k < as.size(); ++k) {
    rhs = add(rhs, power_closed(
                       apply(m, power_closed(closed_modulus(as[k]), p)), 1.0 / p));
  }

  const double exceed = max_exceedance(lhs, rhs);
  const double scale = 1.0 + std::max(max_magnitude(lhs), max_magnitude(rhs));

  CheckReport rep;
  rep.check = "minkowski";
  rep.max_violation = std::max(exceed, 0.0);
  rep.pass = exceed <= cfg.abs_tol * scale;
  rep.details["exceedance"] = exceed;
  rep.details["p"] = p;
  return rep;
}

}  // namespace vlineq
