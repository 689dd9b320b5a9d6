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
#include <map>
#include <string>

#include <json.hpp>

#include "vlineq/lattice.hpp"

namespace vlineq {

/// Outcome of one verification check on one instance.
struct CheckReport {
  std::string check;
  bool pass = true;
  /// Worst signed violation among the inequalities/identities checked;
  /// <= 0 means every comparison held with margin.
  double max_violation = 0.0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
};

/// Aggregate outcome of a randomized verification suite.
struct SuiteReport {
  std::string suite;
  int instances = 0;
  int passes = 0;
  double max_violation = 0.0;
  /// Operands of the worst-violation instance; null when every trial passed
  /// with zero violation.
  nlohmann::ordered_json worst_witness;
  int theta_points = 0;
  int lambda_points = 0;
  int refine_iters = 0;
  /// Named residual maxima observed while running (definitional vs closed
  /// gaps, identity residuals, ...).
  std::map<std::string, double> residuals;
  std::uint64_t seed = 0;

  bool pass() const { return passes == instances; }
  nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json element_to_json(const LatticeElement& f);

}  // namespace vlineq
