// Copyright 2026 The Orlicz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "orlicz/young_function.hpp"

namespace orlicz {

enum class Comparison { near, at_most, greater_than, holds };

/// One scripted check. `basis` says where the expected value comes from:
/// "reference-value", "closed-form" or "oracle-comparison".
struct Measurement {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::near;
  std::string basis;
  bool passed = false;
};

struct CaseReport {
  std::string id;
  bool passed = false;
  std::vector<Measurement> measurements;
};

/// counterexample-q43, entropy-q1, delta2-iff-pfinite, lambda-iff-q,
/// squeezing, smooth-equiv, strict-convex-equiv, transfer, weak-embed.
std::vector<std::string> reproduce_catalog();

/// Throws PreconditionError for an unknown id.
CaseReport reproduce_case(const std::string& id);

/// Built-in library used by the characterization checks (8 functions).
std::vector<std::pair<std::string, YoungFunction>> characterization_library();

struct CharacterizationRow {
  std::string name;
  double p_phi = 0.0;
  double q_phi = 0.0;
  bool delta2 = false;
  bool lambda_below_q = false;  ///< check_lambda at p = q - 0.01
};

std::vector<CharacterizationRow> characterize_library();

nlohmann::json to_json(const CaseReport& r);

}  // namespace orlicz
