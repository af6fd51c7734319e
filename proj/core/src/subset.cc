// Copyright 2026 The setmax Authors.
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

#include "setmax/subset.h"

#include <string>
#include <vector>

#include "setmax/errors.h"

namespace setmax {

Subset::Subset(int width, uint64_t bits) : width_(width), bits_(bits) {
  if (width < 0 || width > kMaxElements) {
    throw ArgumentError("subset width " + std::to_string(width) +
                        " outside [0, 64]");
  }
  if ((bits & ~LowMask(width)) != 0) {
    throw ArgumentError("subset has elements beyond width " +
                        std::to_string(width));
  }
}

Subset Subset::Empty(int width) { return Subset(width, 0); }

Subset Subset::Full(int width) { return Subset(width, LowMask(width)); }

Subset Subset::Singleton(int width, int element) {
  return Empty(width).with(element);
}

Subset Subset::Of(int width, std::initializer_list<int> elements) {
  return Of(width, std::vector<int>(elements));
}

Subset Subset::Of(int width, const std::vector<int>& elements) {
  Subset s = Empty(width);
  for (int e : elements) s = s.with(e);
  return s;
}

Subset Subset::with(int element) const {
  if (element < 0 || element >= width_) {
    throw ArgumentError("element " + std::to_string(element) +
                        " out of range for width " + std::to_string(width_));
  }
  return Subset(width_, bits_ | (uint64_t{1} << element), Unchecked{});
}

Subset Subset::without(int element) const {
  if (element < 0 || element >= width_) {
    throw ArgumentError("element " + std::to_string(element) +
                        " out of range for width " + std::to_string(width_));
  }
  return Subset(width_, bits_ & ~(uint64_t{1} << element), Unchecked{});
}

Subset Subset::Complement() const {
  return Subset(width_, ~bits_ & LowMask(width_), Unchecked{});
}

std::vector<int> Subset::Elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int e : Elements()) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace setmax
