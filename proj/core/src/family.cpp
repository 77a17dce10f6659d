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
#include "orlicz/family.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

double squared_norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

struct TrigMode {
  std::array<double, 2> k{};
  double amplitude = 0.0;
  double phase = 0.0;
};

std::vector<TrigMode> trig_modes(std::uint64_t seed, std::size_t member) {
  std::mt19937_64 gen(seed + 0x9e3779b97f4a7c15ULL * (member + 1));
  std::vector<TrigMode> modes(8);
  for (auto& m : modes) {
    m.k[0] = 4.0 * (2.0 * unit_uniform(gen()) - 1.0);
    m.k[1] = 4.0 * (2.0 * unit_uniform(gen()) - 1.0);
    m.amplitude = 2.0 * unit_uniform(gen()) - 1.0;
    m.phase = 2.0 * std::numbers::pi * unit_uniform(gen());
  }
  return modes;
}

}  // namespace

double unit_uniform(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::gaussian:
      return "gaussian";
    case FamilyKind::modulated_gaussian:
      return "modulated-gaussian";
    case FamilyKind::peaked:
      return "peaked";
    case FamilyKind::plateau:
      return "plateau";
    case FamilyKind::random_trig:
      return "random-trig";
  }
  return "unknown";
}

FamilyKind family_kind_from_string(const std::string& name) {
  for (FamilyKind k : {FamilyKind::gaussian, FamilyKind::modulated_gaussian,
                       FamilyKind::peaked, FamilyKind::plateau,
                       FamilyKind::random_trig}) {
    if (to_string(k) == name) return k;
  }
  throw FormatError("unknown family kind '" + name + "'");
}

void FamilyConfig::validate() const {
  if (kinds.empty()) throw PreconditionError("family needs at least one kind");
  if (count < 1) throw PreconditionError("family count must be >= 1");
}

std::vector<FamilyMember> generate_family(const FamilyConfig& cfg, int dim,
                                          double extent, std::size_t n) {
  cfg.validate();
  std::vector<FamilyMember> out;
  const double d = static_cast<double>(dim);
  for (FamilyKind kind : cfg.kinds) {
    for (std::size_t i = 0; i < cfg.count; ++i) {
      const double fi = static_cast<double>(i);
      FamilyMember m{to_string(kind) + "-" + std::to_string(i),
                     GridFunction::zeros(dim, extent, n)};
      switch (kind) {
        case FamilyKind::gaussian: {
          const double s = 0.5 * std::pow(1.5, fi);
          m.f = GridFunction::sample(dim, extent, n, [=](auto x) {
            return std::exp(-squared_norm(x) / (2.0 * s * s));
          });
          break;
        }
        case FamilyKind::modulated_gaussian: {
          const double w = std::ldexp(1.0, static_cast<int>(i));
          m.f = GridFunction::sample(dim, extent, n, [=](auto x) {
            return std::exp(-0.5 * squared_norm(x)) *
                   std::polar(1.0, w * x[0]);
          });
          break;
        }
        case FamilyKind::peaked: {
          const double s = 0.4 * std::pow(0.6, fi);
          const double scale = std::pow(s, -0.5 * d);
          m.f = GridFunction::sample(dim, extent, n, [=](auto x) {
            return scale * std::exp(-squared_norm(x) / (2.0 * s * s));
          });
          break;
        }
        case FamilyKind::plateau: {
          const double w = 1.0 + fi;
          m.f = GridFunction::sample(dim, extent, n, [=](auto x) {
            double v = 1.0;
            for (double c : x) {
              v *= 0.5 * (std::tanh((c + w) / 0.25) - std::tanh((c - w) / 0.25));
            }
            return v;
          });
          break;
        }
        case FamilyKind::random_trig: {
          const auto modes = trig_modes(cfg.seed, i);
          m.f = GridFunction::sample(dim, extent, n, [&](auto x) {
            double s = 0.0;
            for (const auto& mode : modes) {
              double arg = mode.phase;
              for (std::size_t a = 0; a < x.size(); ++a) arg += mode.k[a] * x[a];
              s += mode.amplitude * std::cos(arg);
            }
            return std::exp(-squared_norm(x) / 8.0) * s;
          });
          break;
        }
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace orlicz
