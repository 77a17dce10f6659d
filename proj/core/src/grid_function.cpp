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
#include "orlicz/grid_function.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include <nlohmann/json.hpp>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void put_le(std::vector<unsigned char>& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<unsigned char>(bits & 0xffu));
    bits >>= 8;
  }
}

double get_le(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | p[i];
  return std::bit_cast<double>(bits);
}

}  // namespace

GridFunction::GridFunction(int dim, double extent, std::size_t n,
                           std::vector<cplx> values)
    : dim_(dim), extent_(extent), n_(n), values_(std::move(values)) {
  if (dim_ != 1 && dim_ != 2) {
    throw PreconditionError("grid functions support d = 1 or d = 2");
  }
  if (!(extent_ > 0.0) || !std::isfinite(extent_)) {
    throw PreconditionError("grid extent must be positive and finite");
  }
  if (n_ < 2 || n_ % 2 != 0) {
    throw PreconditionError("samples per axis must be even and >= 2");
  }
  if (values_.size() != ipow(n_, dim_)) {
    throw PreconditionError("value count does not match n^d");
  }
  for (const cplx& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw PreconditionError("grid function values must be finite");
    }
  }
}

GridFunction GridFunction::zeros(int dim, double extent, std::size_t n) {
  if (dim != 1 && dim != 2) {
    throw PreconditionError("grid functions support d = 1 or d = 2");
  }
  return GridFunction(dim, extent, n, std::vector<cplx>(ipow(n, dim)));
}

double GridFunction::cell_volume() const {
  return std::pow(spacing(), dim_);
}

double GridFunction::domain_volume() const {
  return std::pow(2.0 * extent_, dim_);
}

void GridFunction::point(std::size_t idx, std::array<double, 2>& x) const {
  if (dim_ == 1) {
    x[0] = coordinate(idx);
  } else {
    x[0] = coordinate(idx / n_);
    x[1] = coordinate(idx % n_);
  }
}

bool GridFunction::same_grid(const GridFunction& other) const {
  return dim_ == other.dim_ && n_ == other.n_ && extent_ == other.extent_;
}

std::vector<unsigned char> encode_grid_function(const GridFunction& f) {
  nlohmann::json header = {
      {"dim", f.dim()}, {"extent", f.extent()}, {"n", f.n()}};
  const std::string text = header.dump() + "\n";
  std::vector<unsigned char> out(text.begin(), text.end());
  out.reserve(out.size() + 16 * f.size());
  for (const cplx& v : f.values()) {
    put_le(out, v.real());
    put_le(out, v.imag());
  }
  return out;
}

GridFunction decode_grid_function(std::span<const unsigned char> bytes) {
  const auto* begin = bytes.data();
  const auto* end = begin + bytes.size();
  const auto* newline = std::find(begin, end, static_cast<unsigned char>('\n'));
  if (newline == end) throw FormatError("grid file has no JSON header line");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(std::string(begin, newline));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad grid header: ") + e.what());
  }
  int dim = 0;
  double extent = 0.0;
  std::size_t n = 0;
  try {
    dim = header.at("dim").get<int>();
    extent = header.at("extent").get<double>();
    n = header.at("n").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("grid header fields: ") + e.what());
  }
  if (dim != 1 && dim != 2) throw FormatError("grid dim must be 1 or 2");
  const std::size_t count = ipow(n, dim);
  const auto* data = newline + 1;
  if (static_cast<std::size_t>(end - data) != 16 * count) {
    throw FormatError("grid payload size does not match the header");
  }
  std::vector<cplx> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = cplx(get_le(data + 16 * i), get_le(data + 16 * i + 8));
  }
  return GridFunction(dim, extent, n, std::move(values));
}

void write_grid_function(const GridFunction& f,
                         const std::filesystem::path& path) {
  const auto bytes = encode_grid_function(f);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

GridFunction read_grid_function(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  return decode_grid_function(bytes);
}

}  // namespace orlicz
