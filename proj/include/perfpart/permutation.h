// Copyright 2026 The perfpart Authors
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

#ifndef PERFPART_PERMUTATION_H_
#define PERFPART_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace perfpart {

// Largest supported degree. Image arrays are stored one byte per point and
// graph rows are 64-bit masks.
inline constexpr int kMaxDegree = 64;

// A bijection on {1..n}. Points are 1-based in every public interface; a
// perfect matching of an n x n bipartite graph is the permutation sending
// row i to column p(i).
//
// Permutations are immutable values ordered lexicographically on their image
// arrays.
class Permutation {
 public:
  // Identity on `n` points.
  static Permutation Identity(int n);

  // Builds from 1-based images; throws std::invalid_argument unless `images`
  // is a bijection on {1..images.size()}.
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images);

  int degree() const { return static_cast<int>(images_.size()); }

  // Image of the 1-based point `i`.
  int operator()(int i) const { return images_[i - 1]; }

  // 1-based image array.
  std::vector<int> images() const;

  bool IsIdentity() const;
  int FixedPoints() const;

  // Packs the images of a degree <= 16 permutation into 64 bits (4 bits per
  // point, 0-based). Injective for a fixed degree.
  std::uint64_t Key() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  Permutation() = default;
  std::vector<std::uint8_t> images_;
};

// Disjoint cycles in canonical form: every cycle starts at its smallest
// point, cycles are sorted by that point, fixed points are omitted.
struct CycleForm {
  std::vector<std::vector<int>> cycles;

  // "(1 2)(3 4 5 6)"; the identity renders as "()".
  std::string ToString() const;
  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

// Multiset of cycle lengths, fixed points included, sorted ascending.
using CycleType = std::vector<int>;

// Parses cycle notation such as "(1 2)(3 4 5 6)" or "(1,3,2,4)". Entries may
// be separated by whitespace or commas. When n < 10 an unseparated run of
// digits is read one digit per point, so "(12)(43)(56)" is accepted. Points
// not mentioned are fixed; "" and "()" give the identity.
//
// Throws std::invalid_argument on a repeated point, a point outside
// {1..n}, or malformed parentheses.
Permutation ParseCycles(std::string_view text, int n);

CycleForm ToCycles(const Permutation& p);
std::string ToCycleString(const Permutation& p);

// compose(a, b)(i) = a(b(i)): `b` is applied first. Throws
// std::invalid_argument on a degree mismatch.
Permutation Compose(const Permutation& a, const Permutation& b);
Permutation Inverse(const Permutation& p);
CycleType CycleTypeOf(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Sorts and deduplicates.
void Canonicalize(std::vector<Permutation>& perms);

}  // namespace perfpart

template <>
struct std::hash<perfpart::Permutation> {
  std::size_t operator()(const perfpart::Permutation& p) const noexcept;
};

#endif  // PERFPART_PERMUTATION_H_
