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

#ifndef SETMAX_SUBSET_H_
#define SETMAX_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace setmax {

// Largest supported ground set. Subsets are stored in a single machine word.
inline constexpr int kMaxElements = 64;

// A subset of the ground set {0, ..., width-1}, stored as a bit vector.
//
// Subsets of equal width are totally ordered by the unsigned value of their
// bits. That order is the lexicographic tie-break used wherever two sets reach
// the same objective value: the smaller subset wins.
class Subset {
 public:
  constexpr Subset() = default;

  // Throws ArgumentError if width is outside [0, kMaxElements] or bits has a
  // set bit at or above width.
  Subset(int width, uint64_t bits);

  static Subset Empty(int width);
  static Subset Full(int width);
  static Subset Singleton(int width, int element);
  static Subset Of(int width, std::initializer_list<int> elements);
  static Subset Of(int width, const std::vector<int>& elements);

  int width() const { return width_; }
  uint64_t bits() const { return bits_; }

  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool contains(int element) const {
    return element >= 0 && element < width_ && ((bits_ >> element) & 1u) != 0;
  }

  Subset with(int element) const;
  Subset without(int element) const;

  bool IsSubsetOf(const Subset& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  bool ComparableWith(const Subset& other) const {
    return IsSubsetOf(other) || other.IsSubsetOf(*this);
  }

  // Complement within the ground set.
  Subset Complement() const;

  // Lowest element, or -1 for the empty set.
  int First() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  // Elements in ascending order.
  std::vector<int> Elements() const;

  // "{1,3}" using 1-based element labels.
  std::string ToString() const;

  friend Subset operator|(Subset a, Subset b) {
    return Subset(a.width_, a.bits_ | b.bits_, Unchecked{});
  }
  friend Subset operator&(Subset a, Subset b) {
    return Subset(a.width_, a.bits_ & b.bits_, Unchecked{});
  }
  // Set difference a \ b.
  friend Subset operator-(Subset a, Subset b) {
    return Subset(a.width_, a.bits_ & ~b.bits_, Unchecked{});
  }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  struct Unchecked {};
  constexpr Subset(int width, uint64_t bits, Unchecked)
      : width_(width), bits_(bits) {}

  int width_ = 0;
  uint64_t bits_ = 0;
};

// Mask with the low `width` bits set.
constexpr uint64_t LowMask(int width) {
  return width >= 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
}

// Calls fn(Subset) for every subset of `domain`, in ascending bit order
// starting from the empty set.
template <typename Fn>
void ForEachSubsetOf(const Subset& domain, Fn&& fn) {
  const uint64_t mask = domain.bits();
  uint64_t s = 0;
  while (true) {
    fn(Subset(domain.width(), s));
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

}  // namespace setmax

#endif  // SETMAX_SUBSET_H_
