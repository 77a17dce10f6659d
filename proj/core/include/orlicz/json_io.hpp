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

#include <nlohmann/json.hpp>

#include "orlicz/family.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/symbol_conditions.hpp"
#include "orlicz/thresholds.hpp"
#include "orlicz/young_calculus.hpp"

namespace orlicz {

inline constexpr int kSchemaVersion = 1;

/// Serializes with every floating-point number printed as %.17g and
/// non-finite values as the strings "inf", "-inf", "nan". Keys are sorted.
std::string dump_json(const nlohmann::json& j, int indent = 2);

/// Reads a number that may have been written as "inf" / "-inf" / "nan".
double json_number(const nlohmann::json& j);

nlohmann::json to_json(const YoungFunction& phi);
YoungFunction young_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExponentReport& r);
nlohmann::json to_json(const NormResult& r);
nlohmann::json to_json(const ThresholdReport& r);
nlohmann::json to_json(const PhaseReport& r);
nlohmann::json to_json(const MihlinResult& r);
nlohmann::json to_json(const HormanderResult& r);
nlohmann::json to_json(const SeminormResult& r);
nlohmann::json to_json(const SqueezingConstants& r);
nlohmann::json to_json(const EquivalenceResult& r);
nlohmann::json to_json(const MultiIndex& a, int dim);

nlohmann::json to_json(const FamilyConfig& cfg);
FamilyConfig family_config_from_json(const nlohmann::json& j);

}  // namespace orlicz
