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

#include "vlineq/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "vlineq/instance.hpp"
#include "vlineq/maps.hpp"
#include "vlineq/power.hpp"
#include "vlineq/rng.hpp"
#include "vlineq/sesquilinear.hpp"

namespace vlineq {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

// Mutable view of one suite run: trial results land here.
struct Tally {
  SuiteReport rep;
  GridConfig cfg;
  Rng rng;

  Tally(const std::string& suite, const GridConfig& c, std::uint64_t seed)
      : cfg(c), rng(seed) {
    rep.suite = suite;
    rep.theta_points = c.theta_points;
    rep.lambda_points = c.lambda_points;
    rep.refine_iters = c.refine_iters;
    rep.seed = seed;
  }

  void record(bool pass, double violation, const Json& witness) {
    ++rep.instances;
    if (pass) ++rep.passes;
    if (rep.worst_witness.is_null() || violation > rep.max_violation)
      rep.worst_witness = witness;
    rep.max_violation = std::max(rep.max_violation, violation);
  }

  void residual(const std::string& name, double v) {
    auto [it, inserted] = rep.residuals.emplace(name, v);
    if (!inserted) it->second = std::max(it->second, v);
  }

  ScalarField trial_field() const {
    return rep.instances % 2 == 0 ? ScalarField::real : ScalarField::complex;
  }
};

Json witness_json(std::initializer_list<std::pair<const char*, Json>> fields) {
  Json j = Json::object();
  for (const auto& [key, value] : fields) j[key] = value;
  return j;
}

double magnitude_scale(const LatticeElement& a, const LatticeElement& b) {
  return 1.0 + std::max(max_magnitude(a), max_magnitude(b));
}

std::vector<double> random_weights(Rng& rng, int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (auto& r : w) {
    r = rng.uniform(0.05, 1.0);
    sum += r;
  }
  for (auto& r : w) r /= sum;
  return w;
}

SesquilinearForm random_psd_form(Rng& rng, ScalarField field, int m, int n) {
  std::vector<Eigen::MatrixXcd> matrices;
  matrices.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) matrices.push_back(random_gram_matrix(rng, field, m));
  return SesquilinearForm(field, std::move(matrices));
}

PositiveLinearMap random_positive_map(Rng& rng, int out, int in) {
  Eigen::MatrixXd M(out, in);
  for (int r = 0; r < out; ++r)
    for (int c = 0; c < in; ++c)
      M(r, c) = rng.unit() < 0.5 ? 0.0 : rng.uniform(0.1, 2.0);
  return PositiveLinearMap(std::move(M));
}

PositiveLinearMap random_hom_map(Rng& rng, int out, int in) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(out, in);
  for (int r = 0; r < out; ++r)
    M(r, rng.uniform_int(0, in - 1)) = rng.uniform(0.1, 2.0);
  return PositiveLinearMap(std::move(M));
}

// --- individual suites ------------------------------------------------------

void run_lattice_axioms(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const int dim = t.rng.uniform_int(1, 8);
    const auto f = random_element(t.rng, ScalarField::real, dim, -10.0, 10.0);
    const auto g = random_element(t.rng, ScalarField::real, dim, -10.0, 10.0);
    const auto h = random_element(t.rng, ScalarField::real, dim, -10.0, 10.0);
    const CheckReport rep = lattice_axioms_check(f, g, h);
    t.residual("axiom_residual", rep.max_violation);
    t.record(rep.pass, rep.max_violation,
             witness_json({{"trial", k},
                           {"f", element_to_json(f)},
                           {"g", element_to_json(g)},
                           {"h", element_to_json(h)}}));
  }
}

void run_modulus(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const ScalarField field = t.trial_field();
    const int dim = t.rng.uniform_int(1, 8);
    const auto f = random_element(t.rng, field, dim, -10.0, 10.0);
    const auto g = random_element(t.rng, field, dim, -10.0, 10.0);
    const auto dv = modulus(f, t.cfg);
    const double scale_v = magnitude_scale(dv.definitional, dv.closed);

    const double agree = max_distance(dv.definitional, dv.closed);
    // the grid supremum approaches |f| from below
    const double overshoot = max_exceedance(dv.definitional, dv.closed);
    bool pass = agree <= t.cfg.grid_tol * scale_v &&
                overshoot <= t.cfg.abs_tol * scale_v &&
                dv.closed.in_positive_cone();
    if (field == ScalarField::real) pass = pass && agree == 0.0;

    const auto& mf = dv.closed;
    const auto mg = modulus(g, t.cfg).closed;
    const auto msum = modulus(add(f, g), t.cfg).closed;
    const double triangle = max_exceedance(msum, add(mf, mg));
    pass = pass && triangle <= t.cfg.abs_tol * scale_v;

    const std::complex<double> z =
        field == ScalarField::real
            ? std::complex<double>{t.rng.uniform(-3.0, 3.0), 0.0}
            : t.rng.rect(-3.0, 3.0);
    const double zmag = std::hypot(z.real(), z.imag());
    const double homogeneity =
        max_distance(modulus(scale(z, f), t.cfg).closed,
                     scale({zmag, 0.0}, mf));
    pass = pass && homogeneity <= t.cfg.abs_tol * scale_v * (1.0 + zmag);

    t.residual("path_disagreement", agree);
    t.residual("triangle", triangle);
    t.residual("homogeneity", homogeneity);
    t.record(pass, agree,
             witness_json({{"trial", k}, {"f", element_to_json(f)}}));
  }
}

void run_square_mean(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const int dim = t.rng.uniform_int(1, 8);
    const auto f = random_element(t.rng, ScalarField::real, dim, -10.0, 10.0);
    const auto g = random_element(t.rng, ScalarField::real, dim, -10.0, 10.0);
    const auto dv = square_mean(f, g, t.cfg);
    const double scale_v = magnitude_scale(dv.definitional, dv.closed);

    const double agree = max_distance(dv.definitional, dv.closed);
    const double overshoot = max_exceedance(dv.definitional, dv.closed);
    const double symmetry =
        max_distance(dv.closed, square_mean(g, f, t.cfg).closed);
    const auto mf = modulus(f, t.cfg).closed;
    const auto mg = modulus(g, t.cfg).closed;
    const double lower = max_exceedance(join(mf, mg), dv.closed);
    const double upper = max_exceedance(dv.closed, add(mf, mg));
    const double with_zero =
        max_distance(square_mean(f, LatticeElement::zeros(ScalarField::real, dim),
                                 t.cfg)
                         .closed,
                     mf);

    const bool pass = agree <= t.cfg.grid_tol * scale_v &&
                      overshoot <= t.cfg.abs_tol * scale_v && symmetry == 0.0 &&
                      lower <= t.cfg.abs_tol * scale_v &&
                      upper <= t.cfg.abs_tol * scale_v && with_zero == 0.0;
    t.residual("path_disagreement", agree);
    t.residual("bound_slack", std::max(lower, upper));
    t.record(pass, agree,
             witness_json({{"trial", k},
                           {"f", element_to_json(f)},
                           {"g", element_to_json(g)}}));
  }
}

void run_geometric_mean(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const int dim = t.rng.uniform_int(1, 8);
    const auto f = random_element(t.rng, ScalarField::real, dim, 0.0, 100.0);
    const auto g = random_element(t.rng, ScalarField::real, dim, 0.0, 100.0);
    const auto dv = geometric_mean(f, g, t.cfg);

    const double agree = max_distance(dv.definitional, dv.closed);
    // the grid infimum approaches sqrt(fg) from above
    const double undershoot = max_exceedance(dv.closed, dv.definitional);
    const double symmetry =
        max_distance(dv.closed, geometric_mean(g, f, t.cfg).closed);
    const double idempotent =
        max_distance(geometric_mean(f, f, t.cfg).closed, f);
    const auto am = scale({0.5, 0.0}, add(f, g));
    const double am_gm = max_exceedance(dv.closed, am);
    const double scale_v = magnitude_scale(f, g);

    const bool pass = agree <= t.cfg.grid_tol &&
                      undershoot <= t.cfg.abs_tol && symmetry == 0.0 &&
                      idempotent == 0.0 && am_gm <= t.cfg.abs_tol * scale_v;
    t.residual("path_disagreement", agree);
    t.residual("am_gm_slack", am_gm);
    t.record(pass, agree,
             witness_json({{"trial", k},
                           {"f", element_to_json(f)},
                           {"g", element_to_json(g)}}));
  }
}

void run_weighted_gm(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const ScalarField field = t.trial_field();
    const int dim = t.rng.uniform_int(1, 6);
    const int n = 2 + (k % 2);
    std::vector<LatticeElement> fs;
    for (int i = 0; i < n; ++i)
      fs.push_back(random_element(t.rng, field, dim, -10.0, 10.0));
    const WeightVector w(random_weights(t.rng, n));
    const auto dv = weighted_geometric_mean(fs, w, t.cfg);
    const double scale_v = magnitude_scale(dv.definitional, dv.closed);

    const double agree = max_distance(dv.definitional, dv.closed);
    const double undershoot = max_exceedance(dv.closed, dv.definitional);

    // simultaneous permutation changes nothing, bitwise
    std::vector<LatticeElement> fs_perm;
    std::vector<double> w_perm(static_cast<std::size_t>(n));
    const int shift = t.rng.uniform_int(0, n - 1);
    for (int i = 0; i < n; ++i) {
      fs_perm.push_back(fs[static_cast<std::size_t>((i + shift) % n)]);
      w_perm[static_cast<std::size_t>(i)] = w[(i + shift) % n];
    }
    const auto dvp = weighted_geometric_mean(fs_perm, WeightVector(w_perm), t.cfg);
    const bool permutation_ok = dvp.definitional == dv.definitional &&
                                dvp.closed == dv.closed;

    // identical family: the mean collapses to the modulus
    const std::vector<LatticeElement> same(static_cast<std::size_t>(n), fs[0]);
    const double collapse =
        max_distance(weighted_geometric_mean_closed(same, w),
                     modulus(fs[0], t.cfg).closed);

    const bool pass = agree <= t.cfg.grid_tol * scale_v &&
                      undershoot <= t.cfg.abs_tol * scale_v && permutation_ok &&
                      collapse <= t.cfg.abs_tol * scale_v;
    t.residual("path_disagreement", agree);
    t.residual("identical_family", collapse);
    t.record(pass, agree, witness_json({{"trial", k}, {"n", n}}));
  }
}

void run_powers(Tally& t, int trials) {
  const double exps[] = {0.5, 1.5, 2.5, kPi, kE};
  for (int k = 0; k < trials; ++k) {
    const int dim = t.rng.uniform_int(1, 8);
    const auto a = random_element(t.rng, ScalarField::real, dim, 0.01, 100.0);
    const double r = exps[k % 5];
    const auto dv = power(a, r, t.cfg);
    const double scale_v = magnitude_scale(dv.definitional, dv.closed);

    const double agree = max_distance(dv.definitional, dv.closed);
    const double undershoot = max_exceedance(dv.closed, dv.definitional);

    // integer exponents bypass the infimum factor entirely
    const auto cube = power(a, 3.0, t.cfg);
    const double int_agree = max_distance(cube.definitional, cube.closed);
    const double cube_scale = magnitude_scale(cube.definitional, cube.closed);

    // rational exponents against repeated products and roots
    const int mm = t.rng.uniform_int(1, 5);
    const int nn = t.rng.uniform_int(1, 5);
    LatticeElement am = LatticeElement::unit(ScalarField::real, dim);
    for (int i = 0; i < mm; ++i) am = multiply(am, a);
    const double root_agree =
        max_distance(power_closed(a, static_cast<double>(mm) / nn),
                     nth_root(am, nn));
    const double root_scale = 1.0 + max_magnitude(am);

    const bool pass = agree <= t.cfg.grid_tol &&
                      undershoot <= t.cfg.abs_tol * scale_v &&
                      int_agree <= t.cfg.abs_tol * cube_scale &&
                      root_agree <= t.cfg.abs_tol * root_scale;
    t.residual("path_disagreement", agree);
    t.residual("root_agreement", root_agree);
    t.record(pass, agree,
             witness_json({{"trial", k}, {"r", r}, {"a", element_to_json(a)}}));
  }
}

void run_power_rules(Tally& t, int trials) {
  const double exps[] = {0.5, 1.5, 2.5, kPi, kE};
  for (int k = 0; k < trials; ++k) {
    const int dim = t.rng.uniform_int(1, 8);
    const auto a = random_element(t.rng, ScalarField::real, dim, 0.01, 10.0);
    const double p = exps[t.rng.uniform_int(0, 4)];
    const double q = exps[t.rng.uniform_int(0, 4)];
    const CheckReport rep = check_power_rules(a, p, q, t.cfg);
    t.residual("rule_residual", rep.max_violation);
    t.record(rep.pass, rep.max_violation,
             witness_json({{"trial", k},
                           {"p", p},
                           {"q", q},
                           {"a", element_to_json(a)}}));
  }
}

void run_cauchy_schwarz(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const ScalarField field = t.trial_field();
    const int m = t.rng.uniform_int(1, 6);
    const int n = t.rng.uniform_int(1, 8);
    const auto form = random_psd_form(t.rng, field, m, n);
    const auto u = random_element(t.rng, field, m, -1.0, 1.0);
    const auto v = random_element(t.rng, field, m, -1.0, 1.0);

    const auto rep = cauchy_schwarz_report(form, u, v, t.cfg);
    const auto gap = cs_gap(form, u, v, t.cfg);
    const double scale_v = magnitude_scale(rep.lhs, rep.rhs);

    const double exceed = max_exceedance(rep.lhs, rep.rhs);
    const double gap_agree = max_distance(gap.definitional, gap.closed);
    const auto zero = LatticeElement::zeros(field, n);
    const double gap_negativity =
        std::max(max_exceedance(zero, gap.definitional),
                 max_exceedance(zero, gap.closed));

    // conjugate symmetry is exact for the bitwise-Hermitian generator output
    const auto c_uv = evaluate(form, u, v);
    const auto c_vu = evaluate(form, v, u);
    double conj_sym = 0.0;
    for (int j = 0; j < n; ++j) {
      conj_sym = std::max(
          conj_sym, std::hypot(c_uv[j].real() - c_vu[j].real(),
                               c_uv[j].imag() + c_vu[j].imag()));
    }

    const bool pass = rep.identity_residual <= t.cfg.grid_tol &&
                      exceed <= t.cfg.abs_tol &&
                      gap_agree <= t.cfg.grid_tol * scale_v &&
                      gap_negativity <= t.cfg.abs_tol * scale_v &&
                      conj_sym == 0.0;
    t.residual("identity_residual", rep.identity_residual);
    t.residual("inequality_violation", std::max(exceed, 0.0));
    t.residual("gap_path_disagreement", gap_agree);
    t.record(pass, std::max(rep.identity_residual, exceed),
             witness_json({{"trial", k},
                           {"u", element_to_json(u)},
                           {"v", element_to_json(v)}}));
  }
}

void run_cs_corollary(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const ScalarField field = t.trial_field();
    const int m = t.rng.uniform_int(1, 6);
    const int n = t.rng.uniform_int(1, 8);
    const auto form = random_psd_form(t.rng, field, m, n);
    const auto u = random_element(t.rng, field, m, -1.0, 1.0);
    const auto v = k % 10 == 9 ? u : random_element(t.rng, field, m, -1.0, 1.0);
    const CheckReport rep = cs_corollary_report(form, u, v, t.cfg);
    t.residual("identity_residual", rep.details["identity_residual"].get<double>());
    t.residual("inequality_violation",
               std::max(rep.details["inequality_violation"].get<double>(), 0.0));
    t.record(rep.pass, rep.max_violation,
             witness_json({{"trial", k},
                           {"u", element_to_json(u)},
                           {"v", element_to_json(v)}}));
  }
}

void run_cs_equality(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const ScalarField field = t.trial_field();
    const bool expect_equality = k % 2 == 0;
    bool pass = false;
    double violation = 0.0;
    const int n = t.rng.uniform_int(1, 4);

    if (expect_equality) {
      // rank-one matrices make every coordinate classically parallel
      const int m = t.rng.uniform_int(1, 6);
      std::vector<Eigen::MatrixXcd> matrices;
      for (int j = 0; j < n; ++j) {
        const auto wv = random_element(t.rng, field, m, -1.0, 1.0);
        Eigen::MatrixXcd A(m, m);
        for (int p = 0; p < m; ++p) {
          A(p, p) = {wv[p].real() * wv[p].real() + wv[p].imag() * wv[p].imag(),
                     0.0};
          for (int q = p + 1; q < m; ++q) {
            const std::complex<double> g = wv[p] * std::conj(wv[q]);
            A(p, q) = g;
            A(q, p) = std::conj(g);
          }
        }
        matrices.push_back(std::move(A));
      }
      const SesquilinearForm form(field, std::move(matrices));
      const auto u = random_element(t.rng, field, m, -1.0, 1.0);
      const auto v = random_element(t.rng, field, m, -1.0, 1.0);
      const auto rep = cauchy_schwarz_report(form, u, v, t.cfg);
      violation = max_magnitude(rep.gap);
      pass = rep.equality;
      t.residual("equality_gap", max_magnitude(rep.gap));
    } else {
      // disjoint supports with positive diagonal forms keep the gap large
      const int m = t.rng.uniform_int(2, 6);
      const int split = t.rng.uniform_int(1, m - 1);
      std::vector<Eigen::MatrixXcd> matrices;
      for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(m, m);
        for (int p = 0; p < m; ++p) A(p, p) = {t.rng.uniform(1.0, 2.0), 0.0};
        matrices.push_back(std::move(A));
      }
      const SesquilinearForm form(field, std::move(matrices));
      std::vector<std::complex<double>> uc(static_cast<std::size_t>(m));
      std::vector<std::complex<double>> vc(static_cast<std::size_t>(m));
      for (int p = 0; p < m; ++p) {
        const double sign = t.rng.coin() ? 1.0 : -1.0;
        if (p < split)
          uc[static_cast<std::size_t>(p)] = {sign * t.rng.uniform(1.0, 2.0), 0.0};
        else
          vc[static_cast<std::size_t>(p)] = {sign * t.rng.uniform(1.0, 2.0), 0.0};
      }
      const LatticeElement u(field, std::move(uc));
      const LatticeElement v(field, std::move(vc));
      const auto rep = cauchy_schwarz_report(form, u, v, t.cfg);
      const auto gap = cs_gap(form, u, v, t.cfg);
      double min_gap = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j)
        min_gap = std::min(min_gap, gap.closed[j].real());
      pass = !rep.equality && min_gap >= 0.1;
      violation = std::max(0.0, 0.1 - min_gap);
      t.residual("strict_gap_margin", std::max(0.0, 0.1 - min_gap));
    }
    t.record(pass, violation,
             witness_json({{"trial", k}, {"expect_equality", expect_equality}}));
  }
}

void run_maligranda(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const ScalarField field = t.trial_field();
    const int in = t.rng.uniform_int(1, 6);
    const int out = t.rng.uniform_int(1, 6);
    const auto m = random_positive_map(t.rng, out, in);
    const int n = 2 + (k % 2);
    std::vector<LatticeElement> fs;
    for (int i = 0; i < n; ++i)
      fs.push_back(random_element(t.rng, field, in, -10.0, 10.0));
    const WeightVector w(random_weights(t.rng, n));
    const CheckReport rep = maligranda_check(m, fs, w, t.cfg);
    t.residual("exceedance", rep.max_violation);
    t.record(rep.pass, rep.max_violation, witness_json({{"trial", k}, {"n", n}}));
  }
}

void run_hom_equality(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const ScalarField field = t.trial_field();
    const int in = t.rng.uniform_int(2, 6);
    const int out = t.rng.uniform_int(1, 6);
    const bool hom = k % 2 == 0;
    const int n = 2 + (k % 3 == 2 ? 1 : 0);

    PositiveLinearMap m = hom ? random_hom_map(t.rng, out, in)
                              : random_positive_map(t.rng, out, in);
    if (!hom && m.is_lattice_homomorphism()) {
      // force a second positive entry onto the first row
      Eigen::MatrixXd e = m.entries();
      e(0, 0) = 1.0;
      e(0, 1) = 1.0;
      m = PositiveLinearMap(std::move(e));
    }

    std::vector<LatticeElement> fs;
    for (int i = 0; i < n; ++i)
      fs.push_back(random_element(t.rng, field, in, -10.0, 10.0));
    const WeightVector w(random_weights(t.rng, n));
    const CheckReport rep = homomorphism_equality_check(m, fs, w, t.cfg);

    bool pass = rep.pass;
    double violation = rep.max_violation;
    if (hom) {
      t.residual("equality_distance", rep.max_violation);
    } else {
      const auto witness =
          strictness_witness_search(m, 1000, t.rng.next_u64(), t.cfg);
      pass = pass && witness.has_value();
      if (witness) t.residual("strictness_margin", witness->margin);
      if (!witness) violation = std::max(violation, 1.0);
    }
    t.record(pass, violation,
             witness_json({{"trial", k}, {"homomorphism", hom}}));
  }
}

void run_holder(Tally& t, int trials) {
  for (int k = 0; k < trials; ++k) {
    const ScalarField field = t.trial_field();
    const int in = t.rng.uniform_int(1, 6);
    const int out = t.rng.uniform_int(1, 6);
    const bool cs_slice = k % 10 == 9;
    const int n = cs_slice ? 2 : 2 + (k % 2);

    PositiveLinearMap m =
        cs_slice ? PositiveLinearMap(Eigen::MatrixXd::Ones(1, in))
                 : random_positive_map(t.rng, out, in);
    std::vector<double> ps;
    if (cs_slice) {
      ps = {2.0, 2.0};
    } else if (n == 2) {
      const double r = t.rng.uniform(0.25, 0.75);
      ps = {1.0 / r, 1.0 / (1.0 - r)};
    } else {
      const double r1 = t.rng.uniform(0.2, 0.4);
      const double r2 = t.rng.uniform(0.2, 0.4);
      ps = {1.0 / r1, 1.0 / r2, 1.0 / (1.0 - r1 - r2)};
    }
    std::vector<LatticeElement> as;
    for (int i = 0; i < n; ++i)
      as.push_back(random_element(t.rng, field, in, -4.0, 4.0));
    const CheckReport rep = holder_check(m, as, ExponentVector(ps, 1e-6), t.cfg);
    t.residual("exceedance", rep.max_violation);
    t.residual("form_agreement", rep.details["form_agreement"].get<double>());
    t.record(rep.pass, rep.max_violation,
             witness_json({{"trial", k}, {"n", n}, {"cs_slice", cs_slice}}));
  }
}

void run_minkowski(Tally& t, int trials) {
  const double pvals[] = {1.5, 2.0, 3.0, kPi};
  for (int k = 0; k < trials; ++k) {
    const ScalarField field = t.trial_field();
    const int in = t.rng.uniform_int(1, 6);
    const int out = t.rng.uniform_int(1, 6);
    const double p = pvals[k % 4];
    const int n = t.rng.uniform_int(2, 4);
    const auto m = random_positive_map(t.rng, out, in);

    std::vector<LatticeElement> as;
    const bool parallel = k % 5 == 4;
    if (parallel) {
      const auto base = random_element(t.rng, field, in, -4.0, 4.0);
      for (int i = 0; i < n; ++i)
        as.push_back(scale({t.rng.uniform(0.1, 2.0), 0.0}, base));
    } else {
      for (int i = 0; i < n; ++i)
        as.push_back(random_element(t.rng, field, in, -4.0, 4.0));
    }
    const CheckReport rep = minkowski_check(m, as, p, t.cfg);
    bool pass = rep.pass;
    if (parallel) {
      // parallel summands are the equality case
      LatticeElement total = as[0];
      for (std::size_t i = 1; i < as.size(); ++i) total = add(total, as[i]);
      const auto lhs = power_closed(
          apply(m, power_closed(modulus(total, t.cfg).closed, p)), 1.0 / p);
      LatticeElement rhs = power_closed(
          apply(m, power_closed(modulus(as[0], t.cfg).closed, p)), 1.0 / p);
      for (std::size_t i = 1; i < as.size(); ++i)
        rhs = add(rhs, power_closed(apply(m, power_closed(
                                                 modulus(as[i], t.cfg).closed, p)),
                                    1.0 / p));
      const double eq = max_distance(lhs, rhs);
      pass = pass && eq <= t.cfg.abs_tol * magnitude_scale(lhs, rhs);
      t.residual("parallel_equality", eq);
    }
    t.residual("exceedance", rep.max_violation);
    t.record(pass, rep.max_violation,
             witness_json({{"trial", k}, {"p", p}, {"parallel", parallel}}));
  }
}

}  // namespace

CheckReport lattice_axioms_check(const LatticeElement& f,
                                 const LatticeElement& g,
                                 const LatticeElement& h) {
  if (f.field() != ScalarField::real || g.field() != ScalarField::real ||
      h.field() != ScalarField::real)
    throw std::invalid_argument("lattice_axioms_check: real field required");
  if (f.dim() != g.dim() || f.dim() != h.dim())
    throw std::invalid_argument("lattice_axioms_check: dimension mismatch");

  double worst = 0.0;
  const auto check = [&worst](const LatticeElement& x, const LatticeElement& y) {
    worst = std::max(worst, max_distance(x, y));
  };
  check(join(f, g), join(g, f));
  check(meet(f, g), meet(g, f));
  check(join(f, join(g, h)), join(join(f, g), h));
  check(meet(f, meet(g, h)), meet(meet(f, g), h));
  check(join(f, meet(f, g)), f);
  check(meet(f, join(f, g)), f);
  check(join(f, f), f);
  check(meet(f, f), f);
  check(join(f, meet(g, h)), meet(join(f, g), join(f, h)));
  // order structure is translation invariant and positively homogeneous
  check(add(join(f, g), h), join(add(f, h), add(g, h)));
  for (const double s : {0.0, 0.5, 2.0})
    check(scale({s, 0.0}, join(f, g)),
          join(scale({s, 0.0}, f), scale({s, 0.0}, g)));
  GridConfig cfg;
  check(modulus(f, cfg).closed, join(f, negate(f)));

  CheckReport rep;
  rep.check = "lattice-axioms";
  rep.max_violation = worst;
  rep.pass = worst == 0.0;
  rep.details["axiom_residual"] = worst;
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "lattice-axioms", "modulus",        "square-mean", "geometric-mean",
      "weighted-gm",    "powers",         "power-rules", "cauchy-schwarz",
      "cs-corollary",   "cs-equality",    "maligranda",  "hom-equality",
      "holder",         "minkowski"};
  return names;
}

int default_trials(const std::string& suite) {
  static const std::map<std::string, int> counts{
      {"lattice-axioms", 1000}, {"modulus", 1000},     {"square-mean", 1000},
      {"geometric-mean", 1000}, {"weighted-gm", 500},  {"powers", 500},
      {"power-rules", 500},     {"cauchy-schwarz", 1000},
      {"cs-corollary", 300},    {"cs-equality", 200},  {"maligranda", 1000},
      {"hom-equality", 200},    {"holder", 1000},      {"minkowski", 1000}};
  const auto it = counts.find(suite);
  if (it == counts.end())
    throw std::invalid_argument("unknown suite: " + suite);
  return it->second;
}

SuiteReport run_suite(const std::string& suite, const GridConfig& cfg,
                      int trials, std::uint64_t seed) {
  static const std::map<std::string, std::function<void(Tally&, int)>> runners{
      {"lattice-axioms", run_lattice_axioms},
      {"modulus", run_modulus},
      {"square-mean", run_square_mean},
      {"geometric-mean", run_geometric_mean},
      {"weighted-gm", run_weighted_gm},
      {"powers", run_powers},
      {"power-rules", run_power_rules},
      {"cauchy-schwarz", run_cauchy_schwarz},
      {"cs-corollary", run_cs_corollary},
      {"cs-equality", run_cs_equality},
      {"maligranda", run_maligranda},
      {"hom-equality", run_hom_equality},
      {"holder", run_holder},
      {"minkowski", run_minkowski}};
  const auto it = runners.find(suite);
  if (it == runners.end())
    throw std::invalid_argument("unknown suite: " + suite);
  if (trials < 0) trials = default_trials(suite);
  Tally t(suite, cfg, seed);
  it->second(t, trials);
  return std::move(t.rep);
}

std::vector<SuiteReport> run_all_suites(const GridConfig& cfg, int trials,
                                        std::uint64_t seed) {
  std::vector<SuiteReport> out;
  out.reserve(suite_names().size());
  for (const auto& name : suite_names())
    out.push_back(run_suite(name, cfg, trials, derive_seed(seed, name)));
  return out;
}

}  // namespace vlineq
