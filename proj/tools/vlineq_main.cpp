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

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vlineq/instance.hpp"
#include "vlineq/lattice.hpp"
#include "vlineq/report.hpp"
#include "vlineq/suites.hpp"

namespace {

using Json = nlohmann::ordered_json;

// exit codes: 0 all checks pass, 1 verification failure, 2 parse error,
// 3 validation error, 4 usage error
constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitValidationError = 3;
constexpr int kExitUsageError = 4;

std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("VLINEQ_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const std::uint64_t v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw CLI::ValidationError("VLINEQ_SEED",
                                 "must be an unsigned integer");
    }
  }
  return 42;
}

std::string format_number(const Json& v) { return v.dump(); }

std::string render_text(const Json& doc) {
  std::ostringstream os;
  os << "command: " << doc["command"].get<std::string>() << "\n";
  os << "seed: " << format_number(doc["seed"]) << "\n";
  if (doc.contains("suites")) {
    for (const auto& rep : doc["suites"]) {
      os << "suite " << rep["suite"].get<std::string>() << ": "
         << rep["passes"].get<int>() << "/" << rep["instances"].get<int>()
         << (rep["passes"] == rep["instances"] ? " pass" : " FAIL")
         << " max_violation=" << format_number(rep["max_violation"]) << "\n";
      for (const auto& [name, value] :
           rep["grid_diagnostics"]["residuals"].items())
        os << "  residual " << name << "=" << format_number(value) << "\n";
    }
  }
  if (doc.contains("checks")) {
    for (const auto& rep : doc["checks"]) {
      os << "check " << rep["check"].get<std::string>() << ": "
         << (rep["pass"].get<bool>() ? "pass" : "FAIL")
         << " max_violation=" << format_number(rep["max_violation"]) << "\n";
    }
  }
  os << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

void emit(const Json& doc, const std::string& format,
          const std::string& report_path) {
  const std::string body =
      format == "json" ? doc.dump(2) + "\n" : render_text(doc);
  std::cout << body;
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << body;
  }
}

bool known_suite(const std::string& name) {
  const auto& names = vlineq::suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Json grid_json(const vlineq::GridConfig& cfg) {
  Json j = Json::object();
  j["theta_points"] = cfg.theta_points;
  j["lambda_points"] = cfg.lambda_points;
  j["refine_iters"] = cfg.refine_iters;
  j["abs_tol"] = cfg.abs_tol;
  j["grid_tol"] = cfg.grid_tol;
  return j;
}

int run_verify(const std::string& instance_path, const std::string& suite,
               const vlineq::GridConfig& cfg, int trials, std::uint64_t seed,
               const std::string& format, const std::string& report_path) {
  Json doc = Json::object();
  doc["command"] = "verify";
  doc["seed"] = seed;
  doc["grid"] = grid_json(cfg);
  bool all_pass = true;

  if (!instance_path.empty()) {
    doc["instance"] = instance_path;
    doc["suite"] = suite.empty() ? "all" : suite;
    if (!suite.empty() && suite != "all" && !known_suite(suite))
      throw std::invalid_argument("unknown suite: " + suite);
    const vlineq::InstanceFile instance = vlineq::load_instance(instance_path);
    const auto reports = vlineq::run_instance_checks(
        instance, cfg, suite == "all" ? "" : suite);
    Json checks = Json::array();
    for (const auto& rep : reports) {
      all_pass = all_pass && rep.pass;
      checks.push_back(rep.to_json());
    }
    doc["checks"] = std::move(checks);
  } else {
    const std::string name = suite.empty() ? "all" : suite;
    doc["suite"] = name;
    std::vector<vlineq::SuiteReport> reports;
    if (name == "all") {
      reports = vlineq::run_all_suites(cfg, trials, seed);
    } else {
      reports.push_back(vlineq::run_suite(name, cfg, trials, seed));
    }
    Json suites = Json::array();
    for (const auto& rep : reports) {
      all_pass = all_pass && rep.pass();
      suites.push_back(rep.to_json());
    }
    doc["suites"] = std::move(suites);
  }

  doc["pass"] = all_pass;
  emit(doc, format, report_path);
  return all_pass ? kExitPass : kExitVerificationFailure;
}

int run_generate(const std::string& kind, const std::string& dims,
                 std::uint64_t seed, const std::string& out,
                 const std::string& field) {
  const auto comma = dims.find(',');
  int m = 0;
  int n = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument(dims);
    std::size_t used = 0;
    m = std::stoi(dims.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(dims);
    const std::string rest = dims.substr(comma + 1);
    n = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(dims);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--dims", "expected two integers as m,n");
  }
  if (m <= 0 || n <= 0) throw std::invalid_argument("dims must be positive");

  const vlineq::InstanceFile instance = vlineq::generate_instance(
      kind, m, n, seed, vlineq::field_from_string(field));
  vlineq::save_instance(instance, out);
  std::cout << "wrote " << out << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification tool for coordinatewise lattice identities"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string suite;
  double tol = 0.0;
  int grid_theta = 0;
  int grid_lambda = 0;
  int refine = -1;
  int trials = -1;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string report_path;

  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--instance", instance_path,
                     "instance JSON file (omit to run the built-in suites)");
  verify->add_option("--suite", suite,
                     "suite name, or 'all' (instance mode: filter checks)");
  verify->add_option("--tol", tol, "absolute tolerance for exact identities")
      ->check(CLI::PositiveNumber);
  verify->add_option("--grid-theta", grid_theta, "log-grid step count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--grid-lambda", grid_lambda, "unit-circle grid size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--refine", refine, "refinement iterations")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", trials,
                     "trials per suite (default: per-suite count)");
  auto* verify_seed = verify->add_option("--seed", seed, "master seed");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--report", report_path, "also write the report here");

  std::string kind;
  std::string dims;
  std::string out;
  std::string field = "complex";
  auto* generate = app.add_subcommand("generate", "emit a random instance");
  generate->add_option("--kind", kind, "psd-form | positive-map | lattice-hom | positive-elements")
      ->required();
  generate->add_option("--dims", dims, "dimensions as m,n")->required();
  auto* generate_seed = generate->add_option("--seed", seed, "master seed");
  generate->add_option("--out", out, "output path")->required();
  generate->add_option("--field", field, "real | complex")
      ->check(CLI::IsMember({"real", "complex"}));

  try {
    app.parse(argc, argv);

    vlineq::GridConfig cfg;
    if (tol > 0.0) cfg.abs_tol = tol;
    if (grid_theta > 0) cfg.theta_points = grid_theta;
    if (grid_lambda > 0) cfg.lambda_points = grid_lambda;
    if (refine >= 0) cfg.refine_iters = refine;

    if (verify->parsed()) {
      const std::uint64_t s = resolve_seed(verify_seed->count() > 0, seed);
      return run_verify(instance_path, suite, cfg, trials, s, format,
                        report_path);
    }
    const std::uint64_t s = resolve_seed(generate_seed->count() > 0, seed);
    return run_generate(kind, dims, s, out, field);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const vlineq::SchemaError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
}
