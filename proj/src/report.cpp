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

#include "vlineq/report.hpp"

namespace vlineq {

nlohmann::ordered_json element_to_json(const LatticeElement& e) {
  nlohmann::ordered_json j;
  j["field"] = to_string(e.field());
  auto coords = nlohmann::ordered_json::array();
  for (int i = 0; i < e.dim(); ++i) {
    if (e.field() == ScalarField::real)
      coords.push_back(e[i].real());
    else
      coords.push_back(nlohmann::ordered_json::array({e[i].real(), e[i].imag()}));
  }
  j["coords"] = std::move(coords);
  return j;
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["pass"] = pass;
  j["max_violation"] = max_violation;
  j["details"] = details;
  return j;
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["pass"] = pass();
  j["instances"] = instances;
  j["passes"] = passes;
  j["max_violation"] = max_violation;
  j["worst_witness"] = worst_witness;  // null when no violation was recorded
  auto diag = nlohmann::ordered_json::object();
  diag["theta_points"] = theta_points;
  diag["lambda_points"] = lambda_points;
  diag["refine_iters"] = refine_iters;
  diag["residuals"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : residuals) diag["residuals"][name] = value;
  j["grid_diagnostics"] = std::move(diag);
  j["seed"] = seed;
  return j;
}

}  // namespace vlineq
