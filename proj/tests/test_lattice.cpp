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
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "vlineq/instance.hpp"
#include "vlineq/lattice.hpp"
#include "vlineq/rng.hpp"

using namespace vlineq;

namespace {

LatticeElement re(std::vector<double> coords) {
  return LatticeElement::from_real(std::move(coords));
}

}  // namespace

TEST_CASE("element construction normalizes and validates") {
  const LatticeElement f(ScalarField::real, {{-0.0, 0.0}, {2.0, 0.0}});
  CHECK(!std::signbit(f[0].real()));
  CHECK(f.is_real_valued());
  CHECK_THROWS_AS(LatticeElement(ScalarField::real, {{1.0, 0.5}}),
                  std::invalid_argument);
  const LatticeElement z = LatticeElement::zeros(ScalarField::complex, 3);
  CHECK(z.dim() == 3);
  CHECK(z.in_positive_cone());
  CHECK(LatticeElement::unit(ScalarField::real, 2)[1].real() == 1.0);
}

TEST_CASE("join and meet are exact coordinatewise extrema") {
  const auto f = re({1.0, -2.0, 5.0});
  const auto g = re({0.5, -1.0, 7.0});
  const auto j = join(f, g);
  const auto m = meet(f, g);
  CHECK(j == re({1.0, -1.0, 7.0}));
  CHECK(m == re({0.5, -2.0, 5.0}));
  CHECK(add(j, m) == add(f, g));
  const LatticeElement c(ScalarField::complex, {{1.0, 1.0}});
  CHECK_THROWS_AS(join(c, c), std::invalid_argument);
}

TEST_CASE("linear plumbing") {
  const auto f = re({3.0, -1.0});
  CHECK(negate(f) == re({-3.0, 1.0}));
  CHECK(subtract(f, f) == re({0.0, 0.0}));
  CHECK(scale({2.0, 0.0}, f) == re({6.0, -2.0}));
  CHECK_THROWS_AS(scale({0.0, 1.0}, f), std::invalid_argument);

  const LatticeElement h = complexify(re({1.0, 0.0}), re({0.0, 2.0}));
  CHECK(h.field() == ScalarField::complex);
  CHECK(h[0] == std::complex<double>{1.0, 0.0});
  CHECK(h[1] == std::complex<double>{0.0, 2.0});
  CHECK(real_part(h)[1] == std::complex<double>{0.0, 0.0});
  CHECK(imag_part(h)[1] == std::complex<double>{2.0, 0.0});

  CHECK(positive_clamp(f) == re({3.0, 0.0}));
  CHECK(max_exceedance(f, re({2.0, 0.0})) == 1.0);
  CHECK(max_exceedance(re({2.0, 0.0}), f) == 1.0);
  CHECK(max_magnitude(f) == 3.0);
  CHECK(max_distance(f, re({3.0, 1.0})) == 2.0);
}

TEST_CASE("real modulus is join with the negation, exactly") {
  Rng rng(101);
  const GridConfig cfg;
  for (int k = 0; k < 200; ++k) {
    const auto f =
        random_element(rng, ScalarField::real, rng.uniform_int(1, 8), -50.0, 50.0);
    const auto dv = modulus(f, cfg);
    CHECK(max_distance(dv.closed, join(f, negate(f))) == 0.0);
    CHECK(max_distance(dv.definitional, dv.closed) == 0.0);
    CHECK(dv.closed.in_positive_cone());
  }
}

TEST_CASE("complex modulus: known value and dual-path agreement") {
  const GridConfig cfg;
  const LatticeElement f(ScalarField::complex, {{3.0, 4.0}, {0.0, -2.0}});
  const auto dv = modulus(f, cfg);
  CHECK(dv.closed[0].real() == 5.0);
  CHECK(dv.closed[1].real() == 2.0);

  Rng rng(202);
  for (int k = 0; k < 100; ++k) {
    const auto g =
        random_element(rng, ScalarField::complex, rng.uniform_int(1, 8), -9.0, 9.0);
    const auto d = modulus(g, cfg);
    const double scale_v = 1.0 + max_magnitude(d.closed);
    CHECK(max_distance(d.definitional, d.closed) <= cfg.grid_tol * scale_v);
    // the grid supremum never exceeds the true modulus
    CHECK(max_exceedance(d.definitional, d.closed) <= cfg.abs_tol * scale_v);
  }
}

TEST_CASE("square mean: known value, symmetry, complexification") {
  const GridConfig cfg;
  const auto f = re({3.0});
  const auto g = re({4.0});
  const auto dv = square_mean(f, g, cfg);
  CHECK(dv.closed[0].real() == 5.0);
  CHECK(dv.definitional[0].real() <= 5.0);
  CHECK(dv.definitional[0].real() >= 5.0 - cfg.grid_tol * 6.0);

  Rng rng(303);
  for (int k = 0; k < 100; ++k) {
    const int dim = rng.uniform_int(1, 8);
    const auto a = random_element(rng, ScalarField::real, dim, -20.0, 20.0);
    const auto b = random_element(rng, ScalarField::real, dim, -20.0, 20.0);
    const auto d = square_mean(a, b, cfg);
    const double scale_v = 1.0 + max_magnitude(d.closed);
    CHECK(max_distance(d.definitional, d.closed) <= cfg.grid_tol * scale_v);
    CHECK(max_exceedance(d.definitional, d.closed) <= cfg.abs_tol * scale_v);
    CHECK(max_distance(d.closed, square_mean(b, a, cfg).closed) == 0.0);
    // the square mean of the real and imaginary parts is the modulus;
    // compare coordinatewise because the two live over different fields
    const auto m = modulus(complexify(a, b), cfg);
    for (int i = 0; i < dim; ++i) CHECK(d.closed[i] == m.closed[i]);
  }

  CHECK_THROWS_AS(
      square_mean(LatticeElement(ScalarField::complex, {{1.0, 0.0}}),
                  LatticeElement(ScalarField::complex, {{1.0, 0.0}}), cfg),
      std::invalid_argument);
}

TEST_CASE("geometric mean: known value and bounds") {
  const GridConfig cfg;
  const auto f = re({8.0, 2.0});
  const auto g = re({2.0, 8.0});
  const auto dv = geometric_mean(f, g, cfg);
  CHECK(dv.closed == re({4.0, 4.0}));
  // the parameter family infimum approaches from above
  CHECK(dv.definitional[0].real() >= 4.0 - cfg.abs_tol);
  CHECK(dv.definitional[0].real() <= 4.0 + cfg.grid_tol);

  Rng rng(404);
  for (int k = 0; k < 100; ++k) {
    const int dim = rng.uniform_int(1, 8);
    const auto a = random_element(rng, ScalarField::real, dim, 0.0, 100.0);
    const auto b = random_element(rng, ScalarField::real, dim, 0.0, 100.0);
    const auto d = geometric_mean(a, b, cfg);
    CHECK(max_distance(d.definitional, d.closed) <= cfg.grid_tol);
    CHECK(max_exceedance(d.closed, d.definitional) <= cfg.abs_tol);
    CHECK(max_distance(d.closed, geometric_mean(b, a, cfg).closed) == 0.0);
    CHECK(max_distance(geometric_mean(a, a, cfg).closed, a) == 0.0);
  }

  CHECK_THROWS_AS(geometric_mean(re({-1.0}), re({1.0}), cfg),
                  std::invalid_argument);
}

TEST_CASE("finer grids never worsen the optimization paths") {
  GridConfig coarse;
  coarse.theta_points = 512;
  coarse.lambda_points = 128;
  GridConfig fine = coarse;
  fine.theta_points = 1024;
  fine.lambda_points = 256;

  Rng rng(505);
  for (int k = 0; k < 40; ++k) {
    const int dim = rng.uniform_int(1, 6);
    const auto a = random_element(rng, ScalarField::real, dim, 0.0, 50.0);
    const auto b = random_element(rng, ScalarField::real, dim, 0.0, 50.0);
    // infimum: finer grid can only go down
    CHECK(max_exceedance(geometric_mean(a, b, fine).definitional,
                         geometric_mean(a, b, coarse).definitional) <= 0.0);
    // supremum: finer grid can only go up
    const auto c = random_element(rng, ScalarField::complex, dim, -5.0, 5.0);
    CHECK(max_exceedance(modulus(c, coarse).definitional,
                         modulus(c, fine).definitional) <= 0.0);
    const auto s = random_element(rng, ScalarField::real, dim, -5.0, 5.0);
    const auto t = random_element(rng, ScalarField::real, dim, -5.0, 5.0);
    CHECK(max_exceedance(square_mean(s, t, coarse).definitional,
                         square_mean(s, t, fine).definitional) <= 0.0);
  }
}
