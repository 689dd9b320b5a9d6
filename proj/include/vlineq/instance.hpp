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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlineq/lattice.hpp"
#include "vlineq/maps.hpp"
#include "vlineq/report.hpp"
#include "vlineq/rng.hpp"
#include "vlineq/sesquilinear.hpp"

namespace vlineq {

/// Schema or invariant violation in an instance document. `path` points at
/// the offending node, JSON-pointer style ("/forms/T/0/1/0").
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// One check requested by an instance document.
struct InstanceCheck {
  std::string suite;
  nlohmann::ordered_json operands = nlohmann::ordered_json::object();
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

/// A self-contained verification problem: named operands plus the checks to
/// run against them. Coordinates are serialized as [re, im] pairs.
struct InstanceFile {
  ScalarField field = ScalarField::real;
  std::map<std::string, LatticeElement> elements;
  std::map<std::string, SesquilinearForm> forms;
  std::map<std::string, PositiveLinearMap> maps;
  std::vector<InstanceCheck> checks;
};

/// Parses and validates. Throws nlohmann::json::parse_error on malformed
/// JSON and SchemaError on schema/invariant violations.
InstanceFile load_instance(const std::string& path);
InstanceFile instance_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json instance_to_json(const InstanceFile& instance);
void save_instance(const InstanceFile& instance, const std::string& path);

/// Seeded random instance of the given kind: "psd-form" (dims = domain m,
/// codomain n), "positive-map" (dims = out, in), "lattice-hom" (dims = out,
/// in), "positive-elements" (dims = dimension, count).
InstanceFile generate_instance(const std::string& kind, int m, int n,
                               std::uint64_t seed,
                               ScalarField field = ScalarField::complex);

/// Element with coordinates drawn uniformly from [lo, hi] (both parts in the
/// complex field).
LatticeElement random_element(Rng& rng, ScalarField field, int dim, double lo,
                              double hi);

/// Gram matrix B^H B of a random m x m matrix B with entries in [-1, 1]:
/// positive semidefinite by construction and Hermitian bitwise (explicit
/// upper triangle plus conjugate copies).
Eigen::MatrixXcd random_gram_matrix(Rng& rng, ScalarField field, int m);

/// Runs every check in the instance (or only those whose suite matches
/// `only_suite` when nonempty) and returns one report per check.
std::vector<CheckReport> run_instance_checks(const InstanceFile& instance,
                                             const GridConfig& cfg,
                                             const std::string& only_suite = "");

}  // namespace vlineq
