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

#include <array>
#include <complex>
#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace orlicz {

using cplx = std::complex<double>;

/// Samples on the uniform periodic grid x_j = -L + j h, h = 2L / n, of
/// [-L, L)^d. Values are stored row-major (last axis fastest).
class GridFunction {
 public:
  GridFunction(int dim, double extent, std::size_t n, std::vector<cplx> values);

  /// Zero function on the grid.
  static GridFunction zeros(int dim, double extent, std::size_t n);

  /// Samples f at every grid point; f receives a std::span<const double> of
  /// length dim.
  template <class F>
  static GridFunction sample(int dim, double extent, std::size_t n, F&& f) {
    GridFunction g = zeros(dim, extent, n);
    std::array<double, 2> x{};
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
      g.point(idx, x);
      g.values_[idx] = cplx(f(std::span<const double>(x.data(), g.dim_)));
    }
    return g;
  }

  int dim() const { return dim_; }
  double extent() const { return extent_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double spacing() const { return 2.0 * extent_ / static_cast<double>(n_); }
  double cell_volume() const;
  /// (2L)^d
  double domain_volume() const;

  double coordinate(std::size_t axis_index) const {
    return -extent_ + spacing() * static_cast<double>(axis_index);
  }
  /// Coordinates of the flat index `idx` (first dim() entries written).
  void point(std::size_t idx, std::array<double, 2>& x) const;

  std::span<const cplx> values() const { return values_; }
  std::span<cplx> mutable_values() { return values_; }
  const cplx& operator[](std::size_t i) const { return values_[i]; }

  bool same_grid(const GridFunction& other) const;

 private:
  int dim_;
  double extent_;
  std::size_t n_;
  std::vector<cplx> values_;
};

/// Writes `{"dim":..,"extent":..,"n":..}\n` followed by n^d little-endian
/// IEEE-754 binary64 pairs (re, im), row-major.
void write_grid_function(const GridFunction& f, const std::filesystem::path& path);
GridFunction read_grid_function(const std::filesystem::path& path);

/// In-memory variants of the same byte layout.
std::vector<unsigned char> encode_grid_function(const GridFunction& f);
GridFunction decode_grid_function(std::span<const unsigned char> bytes);

}  // namespace orlicz
