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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orlicz/grid_function.hpp"

namespace orlicz {

enum class FamilyKind { gaussian, modulated_gaussian, peaked, plateau, random_trig };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

/// Members are defined by absolute parameters, so the same config on a
/// finer grid samples the same functions.
///   gaussian:           exp(-|x|^2 / (2 s^2)), s = 0.5 * 1.5^i
///   modulated-gaussian: exp(-|x|^2 / 2) exp(i w x_1), w = 2^i
///   peaked:             exp(-|x|^2 / (2 s^2)) / s^{d/2}, s = 0.4 * 0.6^i
///   plateau:            smoothed indicator of |x|_inf <= 1 + i, edge 0.25
///   random-trig:        exp(-|x|^2 / 8) times 8 seeded cosine modes
struct FamilyConfig {
  std::vector<FamilyKind> kinds{FamilyKind::gaussian, FamilyKind::modulated_gaussian,
                                FamilyKind::peaked, FamilyKind::plateau,
                                FamilyKind::random_trig};
  std::size_t count = 3;
  std::uint64_t seed = 20260101;

  void validate() const;
};

struct FamilyMember {
  std::string label;
  GridFunction f;
};

std::vector<FamilyMember> generate_family(const FamilyConfig& cfg, int dim,
                                          double extent, std::size_t n);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_uniform(std::uint64_t bits);

}  // namespace orlicz
