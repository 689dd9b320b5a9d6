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

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include <doctest.h>
#include <Eigen/Dense>

#include "vlineq/instance.hpp"
#include "vlineq/lattice.hpp"
#include "vlineq/rng.hpp"
#include "vlineq/sesquilinear.hpp"

using namespace vlineq;

namespace {

constexpr double kTau = 6.28318530717958647692;

SesquilinearForm identity_form(ScalarField field, int m, int n) {
  std::vector<Eigen::MatrixXcd> ms(static_cast<std::size_t>(n),
                                   Eigen::MatrixXcd::Identity(m, m));
  return SesquilinearForm(field, std::move(ms));
}

// Literal reading of the gap: scan scalars z on a magnitude/phase grid and
// take the best |z|^{-1} T(zu - v, zu - v), with no algebraic shortcuts.
LatticeElement brute_force_gap(const SesquilinearForm& form,
                               const LatticeElement& u,
                               const LatticeElement& v) {
  const int n = form.codomain_dim();
  std::vector<double> best(static_cast<std::size_t>(n),
                           std::numeric_limits<double>::infinity());
  for (int i = 0; i <= 2400; ++i) {
    const double t = std::pow(10.0, -3.0 + 6.0 * i / 2400.0);
    const int phases = form.field() == ScalarField::real ? 2 : 360;
    for (int p = 0; p < phases; ++p) {
      const std::complex<double> lambda =
          form.field() == ScalarField::real
              ? std::complex<double>{p == 0 ? 1.0 : -1.0, 0.0}
              : std::polar(1.0, kTau * p / phases);
      const std::complex<double> z = t * lambda;
      const auto w = subtract(scale(z, u), v);
      const auto q = evaluate(form, w, w);
      for (int j = 0; j < n; ++j) {
        const double val = q[j].real() / t;
        if (val < best[static_cast<std::size_t>(j)])
          best[static_cast<std::size_t>(j)] = val;
      }
    }
  }
  std::vector<std::complex<double>> coords;
  coords.reserve(best.size());
  for (const double b : best) coords.push_back({b, 0.0});
  return LatticeElement(form.field(), std::move(coords));
}

}  // namespace

TEST_CASE("form construction and validation") {
  CHECK_THROWS_AS(SesquilinearForm(ScalarField::real, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      SesquilinearForm(ScalarField::real, {Eigen::MatrixXcd::Zero(2, 3)}),
      std::invalid_argument);
  CHECK_THROWS_AS(SesquilinearForm(ScalarField::real,
                                   {Eigen::MatrixXcd::Identity(2, 2),
                                    Eigen::MatrixXcd::Identity(3, 3)}),
                  std::invalid_argument);

  Eigen::MatrixXcd herm(2, 2);
  herm << std::complex<double>{1.0, 0.0}, std::complex<double>{0.5, 0.25},
      std::complex<double>{0.5, -0.25}, std::complex<double>{2.0, 0.0};
  const SesquilinearForm f(ScalarField::complex, {herm});
  CHECK(f.is_conjugate_symmetric(1e-12));
  CHECK(f.is_positive_semidefinite(1e-9));

  Eigen::MatrixXcd neg = Eigen::MatrixXcd::Identity(2, 2);
  neg(0, 0) = {-1.0, 0.0};
  const SesquilinearForm g(ScalarField::complex, {neg});
  CHECK(g.is_conjugate_symmetric(1e-12));
  CHECK(!g.is_positive_semidefinite(1e-9));

  Eigen::MatrixXcd skew(2, 2);
  skew << std::complex<double>{1.0, 0.0}, std::complex<double>{1.0, 0.0},
      std::complex<double>{2.0, 0.0}, std::complex<double>{1.0, 0.0};
  CHECK(!SesquilinearForm(ScalarField::complex, {skew})
             .is_conjugate_symmetric(1e-9));
}

TEST_CASE("evaluation: known values and sesquilinearity") {
  Eigen::MatrixXcd one(1, 1);
  one(0, 0) = {1.0, 0.0};
  const SesquilinearForm form(ScalarField::complex, {one});
  const LatticeElement u(ScalarField::complex, {{2.0, 0.0}});
  const LatticeElement v(ScalarField::complex, {{0.0, 3.0}});
  const auto c = evaluate(form, u, v);
  CHECK(c[0] == std::complex<double>{0.0, -6.0});
  CHECK(evaluate(form, u, u)[0] == std::complex<double>{4.0, 0.0});

  Rng rng(321);
  const GridConfig cfg;
  for (int k = 0; k < 40; ++k) {
    const int m = rng.uniform_int(1, 5);
    const int n = rng.uniform_int(1, 4);
    std::vector<Eigen::MatrixXcd> ms;
    for (int j = 0; j < n; ++j)
      ms.push_back(random_gram_matrix(rng, ScalarField::complex, m));
    const SesquilinearForm T(ScalarField::complex, std::move(ms));
    const auto a = random_element(rng, ScalarField::complex, m, -2.0, 2.0);
    const auto b = random_element(rng, ScalarField::complex, m, -2.0, 2.0);
    const auto w = random_element(rng, ScalarField::complex, m, -2.0, 2.0);

    // conjugate symmetry is bitwise for the bitwise-Hermitian generator
    const auto ab = evaluate(T, a, b);
    const auto ba = evaluate(T, b, a);
    for (int j = 0; j < n; ++j) {
      CHECK(ab[j].real() == ba[j].real());
      CHECK(ab[j].imag() == -ba[j].imag());
    }

    // additivity and scalar homogeneity in the first slot
    const std::complex<double> alpha = rng.rect(-2.0, 2.0);
    const auto lhs = evaluate(T, add(scale(alpha, a), w), b);
    const auto rhs = add(scale(alpha, evaluate(T, a, b)), evaluate(T, w, b));
    CHECK(max_distance(lhs, rhs) <= cfg.abs_tol * (1.0 + max_magnitude(rhs)));
  }
}

TEST_CASE("gap against a brute-force scalar scan") {
  const GridConfig cfg;

  // orthogonal vectors under the identity form: the gap is exactly 2
  const SesquilinearForm form = identity_form(ScalarField::real, 2, 1);
  const auto u = LatticeElement::from_real({1.0, 0.0});
  const auto v = LatticeElement::from_real({0.0, 1.0});
  const auto gap = cs_gap(form, u, v, cfg);
  CHECK(gap.closed[0].real() == 2.0);
  CHECK(gap.definitional[0].real() == doctest::Approx(2.0).epsilon(1e-9));
  const auto brute = brute_force_gap(form, u, v);
  CHECK(brute[0].real() == doctest::Approx(2.0).epsilon(1e-4));

  Rng rng(432);
  for (int k = 0; k < 10; ++k) {
    const ScalarField field =
        k % 2 == 0 ? ScalarField::real : ScalarField::complex;
    const int m = rng.uniform_int(1, 4);
    const int n = rng.uniform_int(1, 3);
    std::vector<Eigen::MatrixXcd> ms;
    for (int j = 0; j < n; ++j)
      ms.push_back(random_gram_matrix(rng, field, m));
    const SesquilinearForm T(field, std::move(ms));
    const auto a = random_element(rng, field, m, -1.0, 1.0);
    const auto b = random_element(rng, field, m, -1.0, 1.0);
    const auto g = cs_gap(T, a, b, cfg);
    const auto bf = brute_force_gap(T, a, b);
    const double scale_v = 1.0 + max_magnitude(g.closed);
    // the coarse literal scan sits above the infimum but close to it
    CHECK(max_exceedance(g.closed, bf) <= 1e-9 * scale_v);
    CHECK(max_distance(bf, g.closed) <= 2e-3 * scale_v);
    CHECK(max_distance(g.definitional, g.closed) <= cfg.grid_tol * scale_v);
  }
}

TEST_CASE("gap preconditions are enforced") {
  const GridConfig cfg;
  Eigen::MatrixXcd neg = Eigen::MatrixXcd::Identity(2, 2);
  neg(1, 1) = {-1.0, 0.0};
  const SesquilinearForm bad(ScalarField::real, {neg});
  const auto u = LatticeElement::from_real({1.0, 0.0});
  const auto v = LatticeElement::from_real({0.0, 1.0});
  CHECK_THROWS_AS(cs_gap(bad, u, v, cfg), std::invalid_argument);
}

TEST_CASE("identity report on random positive instances") {
  const GridConfig cfg;
  Rng rng(543);
  for (int k = 0; k < 40; ++k) {
    const ScalarField field =
        k % 2 == 0 ? ScalarField::real : ScalarField::complex;
    const int m = rng.uniform_int(1, 6);
    const int n = rng.uniform_int(1, 8);
    std::vector<Eigen::MatrixXcd> ms;
    for (int j = 0; j < n; ++j)
      ms.push_back(random_gram_matrix(rng, field, m));
    const SesquilinearForm T(field, std::move(ms));
    const auto a = random_element(rng, field, m, -1.0, 1.0);
    const auto b = random_element(rng, field, m, -1.0, 1.0);

    const auto rep = cauchy_schwarz_report(T, a, b, cfg);
    CHECK(rep.identity_residual <= cfg.grid_tol);
    CHECK(max_exceedance(rep.lhs, rep.rhs) <= cfg.abs_tol);
    // the gap is real-valued and nonnegative up to refinement noise
    CHECK(rep.gap.is_real_valued());
    CHECK(max_exceedance(LatticeElement::zeros(field, n), rep.gap) <=
          cfg.abs_tol);

    const auto cor = cs_corollary_report(T, a, b, cfg);
    CHECK(cor.pass);
  }
}

TEST_CASE("equality flag comes from the closed gap") {
  const GridConfig cfg;
  // diagonal forms with crossed supports: lattice equality, no witness
  std::vector<Eigen::MatrixXcd> ms{Eigen::MatrixXcd::Zero(2, 2),
                                   Eigen::MatrixXcd::Zero(2, 2)};
  ms[0](0, 0) = {1.0, 0.0};
  ms[1](1, 1) = {1.0, 0.0};
  const SesquilinearForm T(ScalarField::complex, std::move(ms));
  const LatticeElement u(ScalarField::complex, {{1.0, 0.0}, {0.0, 0.0}});
  const LatticeElement v(ScalarField::complex, {{0.0, 0.0}, {1.0, 0.0}});

  const auto gap = cs_gap(T, u, v, cfg);
  CHECK(gap.closed[0] == std::complex<double>{0.0, 0.0});
  CHECK(gap.closed[1] == std::complex<double>{0.0, 0.0});
  // the scalar family never reaches the infimum: the definitional path
  // stalls at the grid boundary, which must not flip the classification
  CHECK(gap.definitional[0].real() > 0.0);

  const auto rep = cauchy_schwarz_report(T, u, v, cfg);
  CHECK(rep.equality);
  CHECK(!classical_equality_witness_search(T, u, v, 10000, 2026, cfg));
}

TEST_CASE("classical witnesses are found when they exist") {
  const GridConfig cfg;

  // v = 2u: annihilated by (alpha, beta) = (1, -2)
  const SesquilinearForm id2 = identity_form(ScalarField::real, 2, 1);
  const auto u = LatticeElement::from_real({1.0, 2.0});
  const auto v = LatticeElement::from_real({2.0, 4.0});
  const auto w = classical_equality_witness_search(id2, u, v, 4096, 99, cfg);
  REQUIRE(w.has_value());
  const auto [alpha, beta] = *w;
  const auto combo = add(scale(beta, u), scale(alpha, v));
  CHECK(max_magnitude(evaluate(id2, combo, combo)) <= 1e-6);
  CHECK(alpha == std::complex<double>{1.0, 0.0});
  CHECK(beta.real() == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(beta.imag() == 0.0);

  // scalar case with an exact analytic candidate
  Eigen::MatrixXcd one(1, 1);
  one(0, 0) = {1.0, 0.0};
  const SesquilinearForm s(ScalarField::real, {one});
  const auto su = LatticeElement::from_real({1.0});
  const auto sv = LatticeElement::from_real({3.0});
  const auto sw = classical_equality_witness_search(s, su, sv, 4096, 99, cfg);
  REQUIRE(sw.has_value());
  CHECK(sw->first == std::complex<double>{1.0, 0.0});
  CHECK(sw->second.real() == doctest::Approx(-3.0).epsilon(1e-9));
}
