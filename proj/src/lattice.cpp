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

#include "vlineq/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vlineq/detail/search.hpp"

namespace vlineq {

namespace {

// |re + i im| with the exact-real branch shared by every closed form, so
// identities that must agree bitwise go through the same code path.
double abs2d(double re, double im) {
  return im == 0.0 ? std::fabs(re) : std::hypot(re, im);
}

void require_same_shape(const LatticeElement& f, const LatticeElement& g,
                        const char* op) {
  if (f.field() != g.field())
    throw std::invalid_argument(std::string(op) + ": field mismatch");
  if (f.dim() != g.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

void require_real_field(const LatticeElement& f, const char* op) {
  if (f.field() != ScalarField::real)
    throw std::invalid_argument(std::string(op) +
                                ": requires real-field elements");
}

}  // namespace

std::string to_string(ScalarField field) {
  return field == ScalarField::real ? "real" : "complex";
}

ScalarField field_from_string(const std::string& name) {
  if (name == "real") return ScalarField::real;
  if (name == "complex") return ScalarField::complex;
  throw std::invalid_argument("unknown scalar field: " + name);
}

LatticeElement::LatticeElement(ScalarField field,
                               std::vector<std::complex<double>> coords)
    : field_(field), coords_(std::move(coords)) {
  if (coords_.empty())
    throw std::invalid_argument("LatticeElement: dimension must be >= 1");
  for (auto& c : coords_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("LatticeElement: coordinates must be finite");
    if (field_ == ScalarField::real && c.imag() != 0.0)
      throw std::invalid_argument(
          "LatticeElement: real-field coordinate with nonzero imaginary part");
    // canonicalize signed zeros so serialized output and bitwise comparisons
    // never depend on which zero an upstream computation produced
    c = {c.real() == 0.0 ? 0.0 : c.real(), c.imag() == 0.0 ? 0.0 : c.imag()};
  }
}

LatticeElement LatticeElement::zeros(ScalarField field, int dim) {
  return LatticeElement(field, std::vector<std::complex<double>>(
                                   static_cast<std::size_t>(dim), {0.0, 0.0}));
}

LatticeElement LatticeElement::unit(ScalarField field, int dim) {
  return LatticeElement(field, std::vector<std::complex<double>>(
                                   static_cast<std::size_t>(dim), {1.0, 0.0}));
}

LatticeElement LatticeElement::from_real(std::vector<double> coords) {
  std::vector<std::complex<double>> c(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) c[i] = {coords[i], 0.0};
  return LatticeElement(ScalarField::real, std::move(c));
}

bool LatticeElement::is_real_valued() const {
  for (const auto& c : coords_)
    if (c.imag() != 0.0) return false;
  return true;
}

bool LatticeElement::in_positive_cone() const {
  for (const auto& c : coords_)
    if (c.imag() != 0.0 || c.real() < 0.0) return false;
  return true;
}

LatticeElement join(const LatticeElement& f, const LatticeElement& g) {
  require_real_field(f, "join");
  require_real_field(g, "join");
  require_same_shape(f, g, "join");
  std::vector<std::complex<double>> out(f.coords());
  for (int i = 0; i < f.dim(); ++i)
    out[static_cast<std::size_t>(i)] = {std::max(f[i].real(), g[i].real()), 0.0};
  return LatticeElement(ScalarField::real, std::move(out));
}

LatticeElement meet(const LatticeElement& f, const LatticeElement& g) {
  require_real_field(f, "meet");
  require_real_field(g, "meet");
  require_same_shape(f, g, "meet");
  std::vector<std::complex<double>> out(f.coords());
  for (int i = 0; i < f.dim(); ++i)
    out[static_cast<std::size_t>(i)] = {std::min(f[i].real(), g[i].real()), 0.0};
  return LatticeElement(ScalarField::real, std::move(out));
}

LatticeElement add(const LatticeElement& f, const LatticeElement& g) {
  require_same_shape(f, g, "add");
  std::vector<std::complex<double>> out(f.coords());
  for (int i = 0; i < f.dim(); ++i) out[static_cast<std::size_t>(i)] = f[i] + g[i];
  return LatticeElement(f.field(), std::move(out));
}

LatticeElement subtract(const LatticeElement& f, const LatticeElement& g) {
  require_same_shape(f, g, "subtract");
  std::vector<std::complex<double>> out(f.coords());
  for (int i = 0; i < f.dim(); ++i) out[static_cast<std::size_t>(i)] = f[i] - g[i];
  return LatticeElement(f.field(), std::move(out));
}

LatticeElement negate(const LatticeElement& f) {
  std::vector<std::complex<double>> out(f.coords());
  for (auto& c : out) c = -c;
  return LatticeElement(f.field(), std::move(out));
}

LatticeElement scale(std::complex<double> z, const LatticeElement& f) {
  if (f.field() == ScalarField::real && z.imag() != 0.0)
    throw std::invalid_argument("scale: complex scalar on a real-field element");
  std::vector<std::complex<double>> out(f.coords());
  if (z.imag() == 0.0) {
    for (auto& c : out) c = {z.real() * c.real(), z.real() * c.imag()};
  } else {
    for (auto& c : out) c = z * c;
  }
  return LatticeElement(f.field(), std::move(out));
}

LatticeElement real_part(const LatticeElement& f) {
  std::vector<std::complex<double>> out(f.coords());
  for (auto& c : out) c = {c.real(), 0.0};
  return LatticeElement(f.field(), std::move(out));
}

LatticeElement imag_part(const LatticeElement& f) {
  std::vector<std::complex<double>> out(f.coords());
  for (auto& c : out) c = {c.imag(), 0.0};
  return LatticeElement(f.field(), std::move(out));
}

LatticeElement complexify(const LatticeElement& f, const LatticeElement& g) {
  require_real_field(f, "complexify");
  require_real_field(g, "complexify");
  if (f.dim() != g.dim())
    throw std::invalid_argument("complexify: dimension mismatch");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(f.dim()));
  for (int i = 0; i < f.dim(); ++i)
    out[static_cast<std::size_t>(i)] = {f[i].real(), g[i].real()};
  return LatticeElement(ScalarField::complex, std::move(out));
}

LatticeElement positive_clamp(const LatticeElement& f) {
  if (!f.is_real_valued())
    throw std::invalid_argument("positive_clamp: element is not real-valued");
  std::vector<std::complex<double>> out(f.coords());
  for (auto& c : out) c = {std::max(c.real(), 0.0), 0.0};
  return LatticeElement(f.field(), std::move(out));
}

double max_exceedance(const LatticeElement& f, const LatticeElement& g) {
  require_same_shape(f, g, "max_exceedance");
  if (!f.is_real_valued() || !g.is_real_valued())
    throw std::invalid_argument("max_exceedance: order needs real-valued elements");
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < f.dim(); ++i)
    worst = std::max(worst, f[i].real() - g[i].real());
  return worst;
}

double max_magnitude(const LatticeElement& f) {
  double m = 0.0;
  for (const auto& c : f.coords()) m = std::max(m, abs2d(c.real(), c.imag()));
  return m;
}

double max_distance(const LatticeElement& f, const LatticeElement& g) {
  require_same_shape(f, g, "max_distance");
  double m = 0.0;
  for (int i = 0; i < f.dim(); ++i) {
    const auto d = f[i] - g[i];
    m = std::max(m, abs2d(d.real(), d.imag()));
  }
  return m;
}

DualValue modulus(const LatticeElement& f, const GridConfig& cfg) {
  std::vector<std::complex<double>> def(static_cast<std::size_t>(f.dim()));
  std::vector<std::complex<double>> clo(static_cast<std::size_t>(f.dim()));
  const bool is_real = f.field() == ScalarField::real;
  std::vector<double> angles;
  if (!is_real) angles = detail::angle_grid(cfg.lambda_points);
  for (int i = 0; i < f.dim(); ++i) {
    const double re = f[i].real();
    const double im = f[i].imag();
    clo[static_cast<std::size_t>(i)] = {abs2d(re, im), 0.0};
    double d;
    if (is_real) {
      d = std::max(re, -re);  // lambda in {+1, -1}
    } else {
      // best Re(e^{i a} z) over the circle grid, refined
      d = -detail::angle_grid_min(
          angles,
          [re, im](double a) { return -(re * std::cos(a) - im * std::sin(a)); },
          cfg.refine_iters);
    }
    def[static_cast<std::size_t>(i)] = {d, 0.0};
  }
  return {LatticeElement(f.field(), std::move(def)),
          LatticeElement(f.field(), std::move(clo))};
}

DualValue square_mean(const LatticeElement& f, const LatticeElement& g,
                      const GridConfig& cfg) {
  require_real_field(f, "square_mean");
  require_real_field(g, "square_mean");
  require_same_shape(f, g, "square_mean");
  const auto angles = detail::angle_grid(cfg.theta_points);
  std::vector<std::complex<double>> def(static_cast<std::size_t>(f.dim()));
  std::vector<std::complex<double>> clo(static_cast<std::size_t>(f.dim()));
  for (int i = 0; i < f.dim(); ++i) {
    const double x = f[i].real();
    const double y = g[i].real();
    clo[static_cast<std::size_t>(i)] = {abs2d(x, y), 0.0};
    const double d = -detail::angle_grid_min(
        angles, [x, y](double a) { return -(x * std::cos(a) + y * std::sin(a)); },
        cfg.refine_iters);
    def[static_cast<std::size_t>(i)] = {d, 0.0};
  }
  return {LatticeElement(ScalarField::real, std::move(def)),
          LatticeElement(ScalarField::real, std::move(clo))};
}

DualValue geometric_mean(const LatticeElement& f, const LatticeElement& g,
                         const GridConfig& cfg) {
  require_same_shape(f, g, "geometric_mean");
  if (!f.in_positive_cone() || !g.in_positive_cone())
    throw std::invalid_argument("geometric_mean: operands must be positive");
  const auto us = detail::log_grid(cfg.theta_points);
  const auto ts = detail::exp_grid(us);
  std::vector<double> inv_ts(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) inv_ts[k] = 1.0 / ts[k];
  std::vector<std::complex<double>> def(static_cast<std::size_t>(f.dim()));
  std::vector<std::complex<double>> clo(static_cast<std::size_t>(f.dim()));
  for (int i = 0; i < f.dim(); ++i) {
    const double x = f[i].real();
    const double y = g[i].real();
    clo[static_cast<std::size_t>(i)] = {std::sqrt(x * y), 0.0};
    // scan uses the cached reciprocals; refinement re-evaluates exactly
    double vbest = ts[0] * x + inv_ts[0] * y;
    for (std::size_t k = 1; k < ts.size(); ++k)
      vbest = std::min(vbest, ts[k] * x + inv_ts[k] * y);
    const double refined = detail::log_refine_u(
        [x, y](double u) {
          const double t = std::exp(u);
          return t * x + y / t;
        },
        cfg.refine_iters);
    def[static_cast<std::size_t>(i)] = {0.5 * std::min(vbest, refined), 0.0};
  }
  return {LatticeElement(f.field(), std::move(def)),
          LatticeElement(f.field(), std::move(clo))};
}

}  // namespace vlineq
