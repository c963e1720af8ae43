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

#ifndef PERFPART_SEARCH_H_
#define PERFPART_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "perfpart/graph.h"
#include "perfpart/matchings.h"
#include "perfpart/permutation.h"
#include "perfpart/verifier.h"

namespace perfpart {

// Edges are numbered (i-1)*n + (j-1), so n*n must fit in one 64-bit mask.
inline constexpr int kSearchMaxN = 8;
// Outer partition search keeps the covered set as a bitset of this width.
inline constexpr std::size_t kPartitionSearchMaxMatchings = 512;

// Exact cover of the graph's edges by its matchings: every solution is a
// 1-factorization. Matchings are referred to by index into matchings().
class FactorizationFinder {
 public:
  // Throws std::length_error for n > kSearchMaxN, std::domain_error for
  // irregular graphs.
  explicit FactorizationFinder(const Graph& graph);

  const MatchingSet& matchings() const { return matchings_; }
  int degree() const { return degree_; }

  // Calls `visit` with the sorted member indices of every factorization
  // that contains `forced` (when given) and uses only matchings for which
  // `allowed` is true (when given). Stops early, returning false, once
  // `visit` returns false. Branches on the uncovered edge with the fewest
  // candidate matchings, ties to the lowest edge index.
  bool ForEach(std::optional<std::size_t> forced,
               const std::function<bool(std::span<const std::size_t>)>& visit,
               const std::vector<bool>* allowed = nullptr) const;

  std::optional<std::vector<Permutation>> First(
      const Permutation& containing) const;
  std::vector<std::vector<Permutation>> All(
      const std::optional<Permutation>& containing = std::nullopt) const;

 private:
  bool Recurse(std::uint64_t covered, std::vector<std::size_t>& chosen,
               const std::function<bool(std::span<const std::size_t>)>& visit,
               const std::vector<bool>* allowed) const;

  MatchingSet matchings_;
  int degree_;
  std::uint64_t target_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::size_t>> by_edge_;
};

// All factorizations of `graph`, optionally forced to contain `containing`,
// in search order.
std::vector<std::vector<Permutation>> FindFactorizations(
    const Graph& graph,
    const std::optional<Permutation>& containing = std::nullopt);

enum class SearchOutcome { kFound, kNone, kBudgetExceeded };
std::string ToString(SearchOutcome outcome);

struct SearchOptions {
  bool find_all = false;
  // Maximum number of part selections; 0 means unlimited.
  std::uint64_t node_budget = 0;
  // Answer NONE immediately when the degree does not divide the count.
  bool divisibility_precheck = true;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::kNone;
  // First partition found, then further ones when find_all is set; each is
  // canonicalized and complete.
  std::vector<PartitionCertificate> partitions;
  std::uint64_t nodes = 0;
  std::size_t factorizations = 0;
  bool decided_by_precheck = false;
};

// Backtracking over factorizations of the lexicographically least uncovered
// matching. kNone is returned only after the tree is exhausted; running out
// of budget gives kBudgetExceeded instead.
SearchResult FindPerfectPartition(const Graph& graph,
                                  const SearchOptions& options = {});

}  // namespace perfpart

#endif  // PERFPART_SEARCH_H_
