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

#ifndef PERFPART_MATCHINGS_H_
#define PERFPART_MATCHINGS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "perfpart/graph.h"
#include "perfpart/permutation.h"

namespace perfpart {

inline constexpr int kEnumerateMaxN = 16;

// All perfect matchings of a graph, sorted lexicographically by image array,
// with O(1) membership.
class MatchingSet {
 public:
  MatchingSet(Graph graph, std::vector<Permutation> perms);

  const Graph& graph() const { return graph_; }
  const std::vector<Permutation>& perms() const { return perms_; }
  std::size_t size() const { return perms_.size(); }
  const Permutation& operator[](std::size_t i) const { return perms_[i]; }

  std::optional<std::size_t> IndexOf(const Permutation& p) const;
  bool Contains(const Permutation& p) const { return IndexOf(p).has_value(); }

 private:
  Graph graph_;
  std::vector<Permutation> perms_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// Backtracking over allowed columns, ascending. Throws std::length_error
// for n > kEnumerateMaxN.
MatchingSet Enumerate(const Graph& graph);

// Cycle-type classes of the derangements of 6 points. c24_0 is the part of
// c24 whose 2-cycle contains 1.
struct CycleClassification {
  std::vector<Permutation> c6, c33, c24, c24_0, c222;
};

// Throws std::invalid_argument unless the set is the matchings of L(6,1).
CycleClassification ClassifyL61(const MatchingSet& ms);

// Classes of the matchings of L(8,2) by the number of invertible 2 x 2
// blocks. s0_1 is the part of s0 whose off-diagonal zero blocks sit on a
// block involution (1,i)(j,k).
struct BlockClassification {
  std::vector<Permutation> s0, s1, s2, s4, s0_1;
  // Matchings with a block count outside {0, 1, 2, 4}; empty for L(8,2).
  std::vector<Permutation> other;
};

enum class L82Class { kS0One, kS0Rest, kS1, kS2, kS4, kOther };
L82Class ClassOfL82(const Permutation& p);
std::string ToString(L82Class c);

// Throws std::invalid_argument unless the set is the matchings of L(8,2).
BlockClassification ClassifyL82(const MatchingSet& ms);

}  // namespace perfpart

#endif  // PERFPART_MATCHINGS_H_
