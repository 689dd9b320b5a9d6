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
#include <string>
#include <vector>

#include "vlineq/lattice.hpp"
#include "vlineq/report.hpp"

namespace vlineq {

/// All randomized suite names, in run order ("all" not included).
const std::vector<std::string>& suite_names();

/// Exact checks of the lattice axioms (commutativity, associativity,
/// absorption, idempotence, order compatibility) on one real triple.
CheckReport lattice_axioms_check(const LatticeElement& f,
                                 const LatticeElement& g,
                                 const LatticeElement& h);

/// Trial count used when the caller does not override (sized so that the
/// full run stays well under a minute).
int default_trials(const std::string& suite);

/// Runs one named suite. trials < 0 selects the suite default; trials == 0
/// runs nothing and reports 0/0. Deterministic in (suite, cfg, trials, seed).
/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& suite, const GridConfig& cfg,
                      int trials, std::uint64_t seed);

/// Runs every suite ("all"): per-suite seeds are derived from `seed` and the
/// suite name, so the document is deterministic and byte-stable.
std::vector<SuiteReport> run_all_suites(const GridConfig& cfg, int trials,
                                        std::uint64_t seed);

}  // namespace vlineq
