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

#include "vlineq/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vlineq/detail/search.hpp"

namespace vlineq {

namespace {

double abs2d(double re, double im) {
  return im == 0.0 ? std::fabs(re) : std::hypot(re, im);
}

void require_positive(const LatticeElement& a, const char* op) {
  if (!a.in_positive_cone())
    throw std::invalid_argument(std::string(op) + ": operand must be positive");
}

// Free-parameter count for the weighted-mean grid stage: full resolution for
// one free theta, a nested 64-step sub-grid per dimension beyond that.
int stage_steps(int theta_points, int free_dims) {
  if (free_dims <= 1) return theta_points;
  return std::min(theta_points, 64);
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights, double tol)
    : weights_(std::move(weights)) {
  if (weights_.empty())
    throw std::invalid_argument("WeightVector: at least one weight required");
  double sum = 0.0;
  for (const double r : weights_) {
    if (!std::isfinite(r) || r <= 0.0)
      throw std::invalid_argument("WeightVector: weights must be in (0,1)");
    if (r >= 1.0 && weights_.size() > 1)
      throw std::invalid_argument("WeightVector: weights must be in (0,1)");
    if (r > 1.0 + tol)
      throw std::invalid_argument("WeightVector: weights must be in (0,1]");
    sum += r;
  }
  if (std::fabs(sum - 1.0) > tol)
    throw std::invalid_argument("WeightVector: weights must sum to 1");
}

ExponentDecomposition decompose_exponent(double r) {
  if (!std::isfinite(r) || r <= 0.0)
    throw std::invalid_argument("decompose_exponent: exponent must be > 0");
  ExponentDecomposition d;
  d.r = r;
  d.floor_part = static_cast<int>(std::floor(r));
  d.frac_part = r - std::floor(r);
  return d;
}

LatticeElement multiply(const LatticeElement& a, const LatticeElement& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("multiply: field mismatch");
  if (a.dim() != b.dim())
    throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(a.dim()));
  if (a.field() == ScalarField::real) {
    for (int i = 0; i < a.dim(); ++i)
      out[static_cast<std::size_t>(i)] = {a[i].real() * b[i].real(), 0.0};
  } else {
    for (int i = 0; i < a.dim(); ++i)
      out[static_cast<std::size_t>(i)] = a[i] * b[i];
  }
  return LatticeElement(a.field(), std::move(out));
}

LatticeElement nth_root(const LatticeElement& a, int n) {
  require_positive(a, "nth_root");
  if (n < 1) throw std::invalid_argument("nth_root: order must be >= 1");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    const double x = a[i].real();
    double r;
    switch (n) {
      case 1: r = x; break;
      case 2: r = std::sqrt(x); break;
      case 3: r = std::cbrt(x); break;
      default: r = std::pow(x, 1.0 / n); break;
    }
    // libm cube and general roots can be an ulp off even when x is an exact
    // integer power; snap when rounding r recovers x by exact multiplication
    if (n >= 2) {
      const double ri = std::nearbyint(r);
      if (ri >= 2.0) {
        double p = ri;
        bool exact = true;
        for (int k = 1; k < n && exact; ++k) {
          p *= ri;
          exact = p <= 9007199254740992.0;  // 2^53
        }
        if (exact && p == x) r = ri;
      }
    }
    out[static_cast<std::size_t>(i)] = {r, 0.0};
  }
  return LatticeElement(a.field(), std::move(out));
}

LatticeElement power_closed(const LatticeElement& a, double r) {
  require_positive(a, "power");
  if (!std::isfinite(r) || r <= 0.0)
    throw std::invalid_argument("power: exponent must be > 0");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    out[static_cast<std::size_t>(i)] = {std::pow(a[i].real(), r), 0.0};
  return LatticeElement(a.field(), std::move(out));
}

DualValue power(const LatticeElement& a, double r, const GridConfig& cfg) {
  const auto dec = decompose_exponent(r);
  require_positive(a, "power");

  LatticeElement base = LatticeElement::unit(a.field(), a.dim());
  for (int k = 0; k < dec.floor_part; ++k) base = multiply(base, a);

  LatticeElement def = base;
  if (dec.frac_part > 0.0) {
    const double s = dec.frac_part;
    const double q = -s / (1.0 - s);  // second factor keeps t1^s t2^(1-s) = 1
    const auto us = detail::log_grid(cfg.theta_points);
    const auto ts = detail::exp_grid(us);
    std::vector<double> tq(us.size());
    for (std::size_t k = 0; k < us.size(); ++k) tq[k] = std::exp(q * us[k]);

    std::vector<std::complex<double>> factor(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
      const double x = a[i].real();
      double vbest = s * ts[0] * x + (1.0 - s) * tq[0];
      for (std::size_t k = 1; k < ts.size(); ++k)
        vbest = std::min(vbest, s * ts[k] * x + (1.0 - s) * tq[k]);
      const double refined = detail::log_refine_u(
          [s, q, x](double u) {
            return s * std::exp(u) * x + (1.0 - s) * std::exp(q * u);
          },
          cfg.refine_iters);
      factor[static_cast<std::size_t>(i)] = {std::min(vbest, refined), 0.0};
    }
    def = multiply(base, LatticeElement(a.field(), std::move(factor)));
  }
  return {std::move(def), power_closed(a, r)};
}

namespace {

// Canonical family order: sort by weight, then coordinates. Simultaneous
// permutations of (fs, w) then produce bitwise-identical results.
std::vector<std::size_t> canonical_order(const std::vector<LatticeElement>& fs,
                                         const std::vector<double>& w) {
  std::vector<std::size_t> idx(fs.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (w[a] != w[b]) return w[a] < w[b];
    const auto& ca = fs[a].coords();
    const auto& cb = fs[b].coords();
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i].real() != cb[i].real()) return ca[i].real() < cb[i].real();
      if (ca[i].imag() != cb[i].imag()) return ca[i].imag() < cb[i].imag();
    }
    return false;
  });
  return idx;
}

// Infimum of sum_k r_k t_k x_k subject to prod t_k^{r_k} = 1 for one
// coordinate's moduli xs, weights rs (canonical order, solved index last).
double wgm_definitional_coord(const std::vector<double>& xs,
                              const std::vector<double>& rs,
                              const std::vector<double>& stage_us,
                              const GridConfig& cfg) {
  const std::size_t n = xs.size();
  if (n == 1) return xs[0];
  const std::size_t free_dims = n - 1;
  const double r_last = rs[n - 1];

  // objective with the last log-theta solved from the constraint
  const auto value = [&](const std::vector<double>& u) {
    double s = 0.0;
    double proj = 0.0;
    for (std::size_t k = 0; k < free_dims; ++k) {
      s += rs[k] * std::exp(u[k]) * xs[k];
      proj += rs[k] * u[k];
    }
    return s + r_last * std::exp(-proj / r_last) * xs[n - 1];
  };

  // grid stage: odometer over the sampled constraint manifold
  std::vector<std::size_t> pos(free_dims, 0);
  std::vector<double> u(free_dims, 0.0);
  std::vector<double> ubest(free_dims, 0.0);
  double vbest = std::numeric_limits<double>::infinity();
  for (;;) {
    for (std::size_t k = 0; k < free_dims; ++k) u[k] = stage_us[pos[k]];
    const double v = value(u);
    if (v < vbest) {
      vbest = v;
      ubest = u;
    }
    std::size_t k = 0;
    while (k < free_dims && ++pos[k] == stage_us.size()) pos[k++] = 0;
    if (k == free_dims) break;
  }

  // coordinate descent: each slice is convex in its log-theta
  const double lo = detail::kThetaLogMin * detail::kLn10;
  const double hi = detail::kThetaLogMax * detail::kLn10;
  u = ubest;
  double vcur = vbest;
  const int max_sweeps = 20;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = vcur;
    for (std::size_t j = 0; j < free_dims; ++j) {
      double fixed = 0.0;
      double proj = 0.0;
      for (std::size_t k = 0; k < free_dims; ++k) {
        if (k == j) continue;
        fixed += rs[k] * std::exp(u[k]) * xs[k];
        proj += rs[k] * u[k];
      }
      const double rj = rs[j];
      const double xj = xs[j];
      const double xl = xs[n - 1];
      double best_uj = u[j];
      double best_vj = vcur;
      // track the arg as well: ternary over the slice, keep the best point
      double a = lo;
      double b = hi;
      const auto slice = [&](double uj) {
        return fixed + rj * std::exp(uj) * xj +
               r_last * std::exp(-(proj + rj * uj) / r_last) * xl;
      };
      for (int it = 0; it < cfg.refine_iters; ++it) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        const double v1 = slice(m1);
        const double v2 = slice(m2);
        if (v1 < best_vj) {
          best_vj = v1;
          best_uj = m1;
        }
        if (v2 < best_vj) {
          best_vj = v2;
          best_uj = m2;
        }
        if (v1 < v2)
          b = m2;
        else
          a = m1;
      }
      u[j] = best_uj;
      vcur = best_vj;
    }
    if (before - vcur <= 1e-15 * (1.0 + std::fabs(before))) break;
  }
  return std::min(vbest, vcur);
}

// Moduli per coordinate and weights, both in canonical order.
struct WgmData {
  std::vector<double> rs;
  std::vector<std::vector<double>> xs;  // [coordinate][family index]
};

WgmData wgm_prepare(const std::vector<LatticeElement>& fs,
                    const WeightVector& w) {
  if (fs.empty())
    throw std::invalid_argument("weighted_geometric_mean: empty family");
  if (static_cast<int>(fs.size()) != w.size())
    throw std::invalid_argument(
        "weighted_geometric_mean: weight/element count mismatch");
  for (const auto& f : fs) {
    if (f.field() != fs[0].field() || f.dim() != fs[0].dim())
      throw std::invalid_argument("weighted_geometric_mean: shape mismatch");
  }
  const auto order = canonical_order(fs, w.weights());
  const std::size_t n = fs.size();
  const int dim = fs[0].dim();
  WgmData d;
  d.rs.resize(n);
  for (std::size_t k = 0; k < n; ++k) d.rs[k] = w.weights()[order[k]];
  d.xs.assign(static_cast<std::size_t>(dim), std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& f = fs[order[k]];
    for (int i = 0; i < dim; ++i)
      d.xs[static_cast<std::size_t>(i)][k] = abs2d(f[i].real(), f[i].imag());
  }
  return d;
}

}  // namespace

LatticeElement weighted_geometric_mean_closed(
    const std::vector<LatticeElement>& fs, const WeightVector& w) {
  const WgmData d = wgm_prepare(fs, w);
  const int dim = fs[0].dim();
  std::vector<std::complex<double>> clo(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    const auto& x = d.xs[static_cast<std::size_t>(i)];
    double prod = 1.0;
    for (std::size_t k = 0; k < x.size(); ++k) prod *= std::pow(x[k], d.rs[k]);
    clo[static_cast<std::size_t>(i)] = {prod, 0.0};
  }
  return LatticeElement(fs[0].field(), std::move(clo));
}

DualValue weighted_geometric_mean(const std::vector<LatticeElement>& fs,
                                  const WeightVector& w, const GridConfig& cfg) {
  const WgmData d = wgm_prepare(fs, w);
  const std::size_t n = fs.size();
  const int dim = fs[0].dim();
  const auto stage_us =
      detail::log_grid(stage_steps(cfg.theta_points, static_cast<int>(n) - 1));

  std::vector<std::complex<double>> def(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    def[static_cast<std::size_t>(i)] = {
        wgm_definitional_coord(d.xs[static_cast<std::size_t>(i)], d.rs,
                               stage_us, cfg),
        0.0};
  }
  return {LatticeElement(fs[0].field(), std::move(def)),
          weighted_geometric_mean_closed(fs, w)};
}

CheckReport check_power_rules(const LatticeElement& a, double p, double q,
                              const GridConfig& cfg) {
  require_positive(a, "check_power_rules");
  const auto ap = power_closed(a, p);
  const auto aq = power_closed(a, q);
  const auto ap_q = power_closed(ap, q);
  const auto apq = power_closed(a, p * q);
  const auto prod = multiply(ap, aq);
  const auto asum = power_closed(a, p + q);

  const double scale1 = 1.0 + std::max(max_magnitude(ap_q), max_magnitude(apq));
  const double scale2 = 1.0 + std::max(max_magnitude(prod), max_magnitude(asum));
  const double res1 = max_distance(ap_q, apq);
  const double res2 = max_distance(prod, asum);

  CheckReport rep;
  rep.check = "power-rules";
  rep.max_violation = std::max(res1 / scale1, res2 / scale2);
  rep.pass = rep.max_violation <= cfg.abs_tol;
  rep.details["iterated_residual"] = res1;
  rep.details["product_residual"] = res2;
  rep.details["p"] = p;
  rep.details["q"] = q;
  return rep;
}

}  // namespace vlineq
