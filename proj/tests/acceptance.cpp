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

// End-to-end acceptance gate. Ten scenario batteries, one PASS/FAIL line
// each; the process exits nonzero when any battery fails.
//
//   argv[1]  path of the command line binary (battery 10 shells it)
//   argv[2]  path of the bundled data directory

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "vlineq/instance.hpp"
#include "vlineq/lattice.hpp"
#include "vlineq/maps.hpp"
#include "vlineq/power.hpp"
#include "vlineq/rng.hpp"
#include "vlineq/sesquilinear.hpp"

using namespace vlineq;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 2.71828182845904523536;

struct Outcome {
  bool pass = false;
  std::string note;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

template <class... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[192];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

ScalarField alternate(int k) {
  return k % 2 == 0 ? ScalarField::real : ScalarField::complex;
}

SesquilinearForm random_psd_form(Rng& rng, ScalarField field, int m, int n) {
  std::vector<Eigen::MatrixXcd> matrices;
  matrices.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    matrices.push_back(random_gram_matrix(rng, field, m));
  return SesquilinearForm(field, std::move(matrices));
}

PositiveLinearMap random_positive_map(Rng& rng, int out, int in) {
  Eigen::MatrixXd e(out, in);
  for (int r = 0; r < out; ++r)
    for (int c = 0; c < in; ++c)
      e(r, c) = rng.coin() ? 0.0 : rng.uniform(0.1, 2.0);
  return PositiveLinearMap(std::move(e));
}

PositiveLinearMap random_hom_map(Rng& rng, int out, int in) {
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(out, in);
  for (int r = 0; r < out; ++r)
    e(r, rng.uniform_int(0, in - 1)) = rng.uniform(0.1, 2.0);
  return PositiveLinearMap(std::move(e));
}

WeightVector random_weights(Rng& rng, int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& r : w) {
    r = rng.uniform(0.05, 1.0);
    sum += r;
  }
  for (double& r : w) r /= sum;
  return WeightVector(std::move(w), 1e-6);
}

// battery 1: the multiplicative-mean family infimum against its closed form
Outcome battery_geometric_mean() {
  const GridConfig cfg;
  Rng rng(76001);
  const Timer timer;
  double agree = 0.0;
  double undershoot = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int dim = rng.uniform_int(1, 8);
    const auto a = random_element(rng, ScalarField::real, dim, 0.0, 100.0);
    const auto b = random_element(rng, ScalarField::real, dim, 0.0, 100.0);
    const auto dv = geometric_mean(a, b, cfg);
    agree = std::max(agree, max_distance(dv.definitional, dv.closed));
    undershoot = std::max(undershoot, max_exceedance(dv.closed, dv.definitional));
  }
  const double secs = timer.seconds();
  Outcome o;
  o.pass = agree <= 1e-4 && undershoot <= 1e-9 && secs < 5.0;
  o.note = fmt("agree %.2e, undershoot %.2e, %.2fs", agree, undershoot, secs);
  return o;
}

// battery 2: the two-element identity and inequality over random PSD forms
Outcome battery_cauchy_schwarz() {
  const GridConfig cfg;
  Rng rng(76002);
  const Timer timer;
  double residual = 0.0;
  double exceed = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 1000; ++k) {
    const ScalarField field = alternate(k);
    const int m = rng.uniform_int(1, 6);
    const int n = rng.uniform_int(1, 8);
    const auto form = random_psd_form(rng, field, m, n);
    const auto u = random_element(rng, field, m, -1.0, 1.0);
    const auto v = random_element(rng, field, m, -1.0, 1.0);
    const auto rep = cauchy_schwarz_report(form, u, v, cfg);
    residual = std::max(residual, rep.identity_residual);
    exceed = std::max(exceed, max_exceedance(rep.lhs, rep.rhs));
  }
  const double secs = timer.seconds();
  Outcome o;
  o.pass = residual <= 1e-4 && exceed <= 1e-9 && secs < 30.0;
  o.note = fmt("identity residual %.2e, exceedance %.2e, %.2fs", residual,
               exceed, secs);
  return o;
}

// battery 3: equality classification on parallel and on disjoint data
Outcome battery_equality_classification() {
  const GridConfig cfg;
  Rng rng(76003);
  int equality_ok = 0;
  double worst_eq_gap = 0.0;
  for (int k = 0; k < 100; ++k) {
    const ScalarField field = alternate(k);
    const int m = rng.uniform_int(1, 6);
    const int n = rng.uniform_int(1, 4);
    // rank-one matrices make every coordinate classically parallel
    std::vector<Eigen::MatrixXcd> matrices;
    for (int j = 0; j < n; ++j) {
      const auto wv = random_element(rng, field, m, -1.0, 1.0);
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
    const auto u = random_element(rng, field, m, -1.0, 1.0);
    const auto v = random_element(rng, field, m, -1.0, 1.0);
    const auto rep = cauchy_schwarz_report(form, u, v, cfg);
    const auto gap = cs_gap(form, u, v, cfg);
    double max_gap = 0.0;
    for (int j = 0; j < n; ++j)
      max_gap = std::max(max_gap, gap.closed[j].real());
    worst_eq_gap = std::max(worst_eq_gap, max_gap);
    if (rep.equality && max_gap <= 1e-6) ++equality_ok;
  }

  int strict_ok = 0;
  double worst_strict_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100; ++k) {
    const ScalarField field = alternate(k);
    const int m = rng.uniform_int(2, 6);
    const int n = rng.uniform_int(1, 4);
    const int split = rng.uniform_int(1, m - 1);
    // disjoint supports with positive diagonal forms keep the gap large
    std::vector<Eigen::MatrixXcd> matrices;
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(m, m);
      for (int p = 0; p < m; ++p) A(p, p) = {rng.uniform(1.0, 2.0), 0.0};
      matrices.push_back(std::move(A));
    }
    const SesquilinearForm form(field, std::move(matrices));
    std::vector<std::complex<double>> uc(static_cast<std::size_t>(m));
    std::vector<std::complex<double>> vc(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) {
      const double sign = rng.coin() ? 1.0 : -1.0;
      if (p < split)
        uc[static_cast<std::size_t>(p)] = {sign * rng.uniform(1.0, 2.0), 0.0};
      else
        vc[static_cast<std::size_t>(p)] = {sign * rng.uniform(1.0, 2.0), 0.0};
    }
    const LatticeElement u(field, std::move(uc));
    const LatticeElement v(field, std::move(vc));
    const auto rep = cauchy_schwarz_report(form, u, v, cfg);
    const auto gap = cs_gap(form, u, v, cfg);
    double min_gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j)
      min_gap = std::min(min_gap, gap.closed[j].real());
    worst_strict_gap = std::min(worst_strict_gap, min_gap);
    if (!rep.equality && min_gap >= 0.1) ++strict_ok;
  }

  Outcome o;
  o.pass = equality_ok == 100 && strict_ok == 100;
  o.note = fmt("equality %d/100 worst gap %.2e, strict %d/100 min gap %.2f",
               equality_ok, worst_eq_gap, strict_ok, worst_strict_gap);
  return o;
}

// battery 4: the bundled instance is an equality case with no scalar witness
Outcome battery_bundled_instance(const std::string& data_dir) {
  const GridConfig cfg;
  const auto instance = load_instance(data_dir + "/example_noclaeqco.json");
  const auto& form = instance.forms.at("T");
  const auto& u = instance.elements.at("u");
  const auto& v = instance.elements.at("v");

  const auto gap = cs_gap(form, u, v, cfg);
  bool exact_zero = true;
  for (int j = 0; j < form.codomain_dim(); ++j) {
    if (gap.closed[j] != std::complex<double>{0.0, 0.0}) exact_zero = false;
  }
  const auto rep = cauchy_schwarz_report(form, u, v, cfg);
  const auto witness =
      classical_equality_witness_search(form, u, v, 10000, 2026, cfg);

  Outcome o;
  o.pass = exact_zero && rep.equality && !witness.has_value();
  std::ostringstream note;
  note << "closed gap exactly zero: " << (exact_zero ? "yes" : "no")
       << ", classified equality: " << (rep.equality ? "yes" : "no")
       << ", witness over 10000 probes: " << (witness ? "found" : "none");
  o.note = note.str();
  return o;
}

// battery 5: exponent arithmetic rules and the power family infimum
Outcome battery_powers() {
  const GridConfig cfg;
  Rng rng(76005);
  const double exps[] = {0.5, 1.5, 2.5, kPi, kEuler};
  const double family_exps[] = {0.5, 2.5, kPi};
  double rule_residual = 0.0;
  double agree = 0.0;
  for (int k = 0; k < 500; ++k) {
    const auto a =
        random_element(rng, ScalarField::real, rng.uniform_int(1, 8), 0.01, 100.0);
    const double p = exps[rng.uniform_int(0, 4)];
    const double q = exps[rng.uniform_int(0, 4)];
    const auto rep = check_power_rules(a, p, q, cfg);
    rule_residual = std::max(rule_residual, rep.max_violation);

    const double r = family_exps[k % 3];
    const auto dv = power(a, r, cfg);
    agree = std::max(agree, max_distance(dv.definitional, dv.closed));
  }
  Outcome o;
  o.pass = rule_residual <= 1e-9 && agree <= 1e-4;
  o.note = fmt("rule residual %.2e, definitional agree %.2e", rule_residual,
               agree);
  return o;
}

// battery 6: product-exponent inequality including the discrete special case
Outcome battery_holder() {
  const GridConfig cfg;
  Rng rng(76006);
  double exceed = 0.0;
  double form_agree = 0.0;
  double slice_gap = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ScalarField field = alternate(k);
    const int in = rng.uniform_int(1, 6);
    const int out = rng.uniform_int(1, 6);
    const bool cs_slice = k % 10 == 9;
    const int n = cs_slice ? 2 : 2 + (k % 2);

    PositiveLinearMap m =
        cs_slice ? PositiveLinearMap(Eigen::MatrixXd::Ones(1, in))
                 : random_positive_map(rng, out, in);
    std::vector<double> ps;
    if (cs_slice) {
      ps = {2.0, 2.0};
    } else if (n == 2) {
      const double r = rng.uniform(0.25, 0.75);
      ps = {1.0 / r, 1.0 / (1.0 - r)};
    } else {
      const double r1 = rng.uniform(0.2, 0.4);
      const double r2 = rng.uniform(0.2, 0.4);
      ps = {1.0 / r1, 1.0 / r2, 1.0 / (1.0 - r1 - r2)};
    }
    std::vector<LatticeElement> as;
    for (int i = 0; i < n; ++i)
      as.push_back(random_element(rng, field, in, -4.0, 4.0));
    const auto rep = holder_check(m, as, ExponentVector(ps, 1e-6), cfg);
    exceed = std::max(
        exceed,
        std::max(rep.details["product_form_exceedance"].get<double>(),
                 rep.details["mean_form_exceedance"].get<double>()));
    form_agree =
        std::max(form_agree, rep.details["form_agreement"].get<double>());

    if (cs_slice) {
      // summation map with exponents (2, 2): the two-vector inequality
      const auto ma = modulus(as[0], cfg).closed;
      const auto mb = modulus(as[1], cfg).closed;
      double dot = 0.0;
      double na = 0.0;
      double nb = 0.0;
      for (int j = 0; j < in; ++j) {
        dot += ma[j].real() * mb[j].real();
        na += ma[j].real() * ma[j].real();
        nb += mb[j].real() * mb[j].real();
      }
      const auto lhs = apply(m, multiply(ma, mb));
      slice_gap = std::max(slice_gap, std::fabs(lhs[0].real() - dot));
      slice_gap = std::max(slice_gap, dot - std::sqrt(na) * std::sqrt(nb));
    }
  }
  Outcome o;
  o.pass = exceed <= 1e-9 && form_agree <= 1e-9 && slice_gap <= 1e-9;
  o.note = fmt("exceedance %.2e, form agreement %.2e, discrete slice %.2e",
               exceed, form_agree, slice_gap);
  return o;
}

// battery 7: sum-exponent inequality including the parallel equality case
Outcome battery_minkowski() {
  const GridConfig cfg;
  Rng rng(76007);
  const double pvals[] = {1.5, 2.0, 3.0, kPi};
  double exceed = 0.0;
  double parallel_residual = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ScalarField field = alternate(k);
    const int in = rng.uniform_int(1, 6);
    const int out = rng.uniform_int(1, 6);
    const double p = pvals[k % 4];
    const int n = rng.uniform_int(2, 4);
    const auto m = random_positive_map(rng, out, in);

    std::vector<LatticeElement> as;
    const bool parallel = k % 5 == 4;
    if (parallel) {
      const auto base = random_element(rng, field, in, -4.0, 4.0);
      for (int i = 0; i < n; ++i)
        as.push_back(scale({rng.uniform(0.1, 2.0), 0.0}, base));
    } else {
      for (int i = 0; i < n; ++i)
        as.push_back(random_element(rng, field, in, -4.0, 4.0));
    }
    const auto rep = minkowski_check(m, as, p, cfg);
    exceed = std::max(exceed, rep.details["exceedance"].get<double>());

    if (parallel) {
      LatticeElement total = as[0];
      for (std::size_t i = 1; i < as.size(); ++i) total = add(total, as[i]);
      const auto lhs = power_closed(
          apply(m, power_closed(modulus(total, cfg).closed, p)), 1.0 / p);
      LatticeElement rhs = power_closed(
          apply(m, power_closed(modulus(as[0], cfg).closed, p)), 1.0 / p);
      for (std::size_t i = 1; i < as.size(); ++i)
        rhs = add(rhs,
                  power_closed(
                      apply(m, power_closed(modulus(as[i], cfg).closed, p)),
                      1.0 / p));
      parallel_residual = std::max(parallel_residual, max_distance(lhs, rhs));
    }
  }
  Outcome o;
  o.pass = exceed <= 1e-9 && parallel_residual <= 1e-9;
  o.note = fmt("exceedance %.2e, parallel equality residual %.2e", exceed,
               parallel_residual);
  return o;
}

// battery 8: mapped-mean inequality, its equality class, and strictness
Outcome battery_mapped_means() {
  const GridConfig cfg;
  Rng rng(76008);
  double exceed = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ScalarField field = alternate(k);
    const int in = rng.uniform_int(1, 6);
    const int out = rng.uniform_int(1, 6);
    const auto m = random_positive_map(rng, out, in);
    const int n = 2 + (k % 2);
    std::vector<LatticeElement> fs;
    for (int i = 0; i < n; ++i)
      fs.push_back(random_element(rng, field, in, -10.0, 10.0));
    const auto rep = maligranda_check(m, fs, random_weights(rng, n), cfg);
    exceed = std::max(exceed, rep.details["exceedance"].get<double>());
  }

  double hom_distance = 0.0;
  for (int k = 0; k < 200; ++k) {
    const ScalarField field = alternate(k);
    const int in = rng.uniform_int(2, 6);
    const int out = rng.uniform_int(1, 6);
    const auto m = random_hom_map(rng, out, in);
    const int n = 2 + (k % 3 == 2 ? 1 : 0);
    std::vector<LatticeElement> fs;
    for (int i = 0; i < n; ++i)
      fs.push_back(random_element(rng, field, in, -10.0, 10.0));
    const auto rep = homomorphism_equality_check(m, fs, random_weights(rng, n), cfg);
    hom_distance = std::max(hom_distance, rep.details["distance"].get<double>());
  }

  int witnesses = 0;
  for (int k = 0; k < 50; ++k) {
    const int in = rng.uniform_int(2, 6);
    const int out = rng.uniform_int(1, 6);
    PositiveLinearMap m = random_positive_map(rng, out, in);
    if (m.is_lattice_homomorphism()) {
      Eigen::MatrixXd e = m.entries();
      e(0, 0) = 1.0;
      e(0, 1) = 1.0;
      m = PositiveLinearMap(std::move(e));
    }
    const auto witness = strictness_witness_search(m, 1000, rng.next_u64(), cfg);
    if (witness.has_value() && witness->margin > 0.0) ++witnesses;
  }

  Outcome o;
  o.pass = exceed <= 1e-9 && hom_distance <= 1e-9 && witnesses == 50;
  o.note = fmt("exceedance %.2e, equality distance %.2e, witnesses %d/50",
               exceed, hom_distance, witnesses);
  return o;
}

// battery 9: doubling the multiplicative grid never worsens any family optimum
Outcome battery_grid_doubling() {
  GridConfig base;
  GridConfig doubled;
  doubled.theta_points = base.theta_points * 2;

  Rng rng(76009);
  double worst = -std::numeric_limits<double>::infinity();

  for (int k = 0; k < 100; ++k) {
    const int dim = rng.uniform_int(1, 8);
    const auto a = random_element(rng, ScalarField::real, dim, 0.0, 100.0);
    const auto b = random_element(rng, ScalarField::real, dim, 0.0, 100.0);
    // infimum: the doubled grid may only go down
    worst = std::max(worst,
                     max_exceedance(geometric_mean(a, b, doubled).definitional,
                                    geometric_mean(a, b, base).definitional));
  }
  for (int k = 0; k < 100; ++k) {
    const ScalarField field = alternate(k);
    const int m = rng.uniform_int(1, 6);
    const int n = rng.uniform_int(1, 8);
    const auto form = random_psd_form(rng, field, m, n);
    const auto u = random_element(rng, field, m, -1.0, 1.0);
    const auto v = random_element(rng, field, m, -1.0, 1.0);
    worst = std::max(worst,
                     max_exceedance(cs_gap(form, u, v, doubled).definitional,
                                    cs_gap(form, u, v, base).definitional));
  }
  const double family_exps[] = {0.5, 2.5, kPi};
  for (int k = 0; k < 100; ++k) {
    const auto a =
        random_element(rng, ScalarField::real, rng.uniform_int(1, 8), 0.01, 100.0);
    const double r = family_exps[k % 3];
    worst = std::max(worst, max_exceedance(power(a, r, doubled).definitional,
                                           power(a, r, base).definitional));
  }

  Outcome o;
  o.pass = worst <= 0.0;
  o.note = fmt("worst doubled-minus-base exceedance %.2e over 300 instances",
               worst);
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// battery 10: repeated seeded CLI runs give byte-identical reports
Outcome battery_cli_determinism(const std::string& cli) {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path();
  const std::string r1 = (tmp / "vlineq_accept_report1.json").string();
  const std::string r2 = (tmp / "vlineq_accept_report2.json").string();

  const Timer timer;
  const std::string base =
      "'" + cli + "' verify --suite all --seed 42 --report ";
  const int rc1 = std::system((base + "'" + r1 + "' > /dev/null").c_str());
  const int rc2 = std::system((base + "'" + r2 + "' > /dev/null").c_str());
  const double secs = timer.seconds();

  const std::string d1 = read_file(r1);
  const std::string d2 = read_file(r2);
  std::error_code ec;
  fs::remove(r1, ec);
  fs::remove(r2, ec);

  Outcome o;
  o.pass = rc1 == 0 && rc2 == 0 && !d1.empty() && d1 == d2 && secs < 60.0;
  std::ostringstream note;
  note << "exit " << rc1 << "/" << rc2 << ", reports "
       << (d1 == d2 && !d1.empty() ? "identical" : "DIFFER") << ", "
       << fmt("%.2fs", secs);
  o.note = note.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <cli-binary> <data-dir>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::string data_dir = argv[2];

  struct Battery {
    const char* label;
    Outcome outcome;
  };
  std::vector<Battery> batteries;
  batteries.push_back({"geometric mean dual paths, 1000 random pairs",
                       battery_geometric_mean()});
  batteries.push_back({"two-element identity and inequality, 1000 PSD forms",
                       battery_cauchy_schwarz()});
  batteries.push_back({"equality classification, 100 parallel + 100 disjoint",
                       battery_equality_classification()});
  batteries.push_back({"bundled instance: equality without scalar witness",
                       battery_bundled_instance(data_dir)});
  batteries.push_back({"power rules and power family, 500 positive elements",
                       battery_powers()});
  batteries.push_back({"product-exponent inequality, 1000 instances",
                       battery_holder()});
  batteries.push_back({"sum-exponent inequality, 1000 instances",
                       battery_minkowski()});
  batteries.push_back({"mapped means: inequality, equality, strictness",
                       battery_mapped_means()});
  batteries.push_back({"grid doubling never worsens family optima",
                       battery_grid_doubling()});
  batteries.push_back({"seeded CLI reports are byte-identical",
                       battery_cli_determinism(cli)});

  int failures = 0;
  for (std::size_t i = 0; i < batteries.size(); ++i) {
    const auto& b = batteries[i];
    if (!b.outcome.pass) ++failures;
    std::printf("criterion %2zu: %s  %s [%s]\n", i + 1,
                b.outcome.pass ? "PASS" : "FAIL", b.label,
                b.outcome.note.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
