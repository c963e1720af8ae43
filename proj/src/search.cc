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

#include "perfpart/search.h"

#include <algorithm>
#include <bit>
#include <bitset>
#include <limits>
#include <stdexcept>

namespace perfpart {
namespace {

const Graph& CheckSearchable(const Graph& graph) {
  if (graph.n() > kSearchMaxN) {
    throw std::length_error("exact-cover search supports n <= " +
                            std::to_string(kSearchMaxN));
  }
  return graph;
}

}  // namespace

FactorizationFinder::FactorizationFinder(const Graph& graph)
    : matchings_(Enumerate(CheckSearchable(graph))),
      degree_(graph.Degree()) {
  const int n = graph.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (graph.edge(i, j)) target_ |= std::uint64_t{1} << ((i - 1) * n + j - 1);
    }
  }
  by_edge_.resize(n * n);
  masks_.reserve(matchings_.size());
  for (std::size_t k = 0; k < matchings_.size(); ++k) {
    const auto& p = matchings_[k];
    std::uint64_t mask = 0;
    for (int i = 1; i <= n; ++i) {
      const int e = (i - 1) * n + p(i) - 1;
      mask |= std::uint64_t{1} << e;
      by_edge_[e].push_back(k);
    }
    masks_.push_back(mask);
  }
}

bool FactorizationFinder::Recurse(
    std::uint64_t covered, std::vector<std::size_t>& chosen,
    const std::function<bool(std::span<const std::size_t>)>& visit,
    const std::vector<bool>* allowed) const {
  if (covered == target_) {
    std::vector<std::size_t> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    return visit(sorted);
  }
  // Most constrained uncovered edge.
  int best_edge = -1;
  std::size_t best_count = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t open = target_ & ~covered; open; open &= open - 1) {
    const int e = std::countr_zero(open);
    std::size_t count = 0;
    for (std::size_t k : by_edge_[e]) {
      if ((masks_[k] & covered) == 0 && (!allowed || (*allowed)[k])) ++count;
    }
    if (count < best_count) {
      best_count = count;
      best_edge = e;
      if (count == 0) return true;
    }
  }
  for (std::size_t k : by_edge_[best_edge]) {
    if ((masks_[k] & covered) != 0 || (allowed && !(*allowed)[k])) continue;
    chosen.push_back(k);
    const bool keep_going = Recurse(covered | masks_[k], chosen, visit, allowed);
    chosen.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

bool FactorizationFinder::ForEach(
    std::optional<std::size_t> forced,
    const std::function<bool(std::span<const std::size_t>)>& visit,
    const std::vector<bool>* allowed) const {
  if (target_ == 0) return true;
  std::vector<std::size_t> chosen;
  std::uint64_t covered = 0;
  if (forced) {
    if (allowed && !(*allowed)[*forced]) return true;
    chosen.push_back(*forced);
    covered = masks_[*forced];
  }
  return Recurse(covered, chosen, visit, allowed);
}

std::optional<std::vector<Permutation>> FactorizationFinder::First(
    const Permutation& containing) const {
  const auto index = matchings_.IndexOf(containing);
  if (!index) return std::nullopt;
  std::optional<std::vector<Permutation>> found;
  ForEach(*index, [&](std::span<const std::size_t> members) {
    found.emplace();
    for (auto k : members) found->push_back(matchings_[k]);
    return false;
  });
  return found;
}

std::vector<std::vector<Permutation>> FactorizationFinder::All(
    const std::optional<Permutation>& containing) const {
  std::vector<std::vector<Permutation>> out;
  std::optional<std::size_t> forced;
  if (containing) {
    forced = matchings_.IndexOf(*containing);
    if (!forced) return out;
  }
  ForEach(forced, [&](std::span<const std::size_t> members) {
    auto& f = out.emplace_back();
    for (auto k : members) f.push_back(matchings_[k]);
    return true;
  });
  return out;
}

std::vector<std::vector<Permutation>> FindFactorizations(
    const Graph& graph, const std::optional<Permutation>& containing) {
  return FactorizationFinder(graph).All(containing);
}

std::string ToString(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::kFound:
      return "found";
    case SearchOutcome::kNone:
      return "none";
    case SearchOutcome::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

namespace {

using MatchingBits = std::bitset<kPartitionSearchMaxMatchings>;

class PartitionSearch {
 public:
  PartitionSearch(const FactorizationFinder& finder,
                  const SearchOptions& options, const Graph& graph)
      : finder_(finder), options_(options), graph_(graph) {
    const std::size_t count = finder.matchings().size();
    containing_.resize(count);
    finder.ForEach(std::nullopt, [&](std::span<const std::size_t> members) {
      MatchingBits bits;
      for (auto k : members) bits.set(k);
      const std::size_t id = factorizations_.size();
      factorizations_.push_back(bits);
      members_.emplace_back(members.begin(), members.end());
      for (auto k : members) containing_[k].push_back(id);
      return true;
    });
  }

  SearchResult Run() {
    SearchResult result;
    result.factorizations = factorizations_.size();
    MatchingBits covered;
    std::vector<std::size_t> chosen;
    const bool finished = Recurse(covered, chosen, result);
    result.nodes = nodes_;
    if (!result.partitions.empty()) {
      result.outcome = SearchOutcome::kFound;
    } else {
      result.outcome =
          finished || !budget_hit_ ? SearchOutcome::kNone
                                   : SearchOutcome::kBudgetExceeded;
    }
    if (budget_hit_ && options_.find_all) {
      // Enumeration was cut short; report the budget even with results.
      result.outcome = SearchOutcome::kBudgetExceeded;
    }
    return result;
  }

 private:
  // Returns false to stop the whole search.
  bool Recurse(MatchingBits& covered, std::vector<std::size_t>& chosen,
               SearchResult& result) {
    const std::size_t count = finder_.matchings().size();
    std::size_t least = count;
    for (std::size_t k = 0; k < count; ++k) {
      if (!covered.test(k)) {
        least = k;
        break;
      }
    }
    if (least == count) {
      Record(chosen, result);
      return options_.find_all;
    }
    for (std::size_t id : containing_[least]) {
      if ((factorizations_[id] & covered).any()) continue;
      if (options_.node_budget && nodes_ >= options_.node_budget) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      covered |= factorizations_[id];
      chosen.push_back(id);
      const bool keep_going = Recurse(covered, chosen, result);
      chosen.pop_back();
      covered &= ~factorizations_[id];
      if (!keep_going) return false;
    }
    return true;
  }

  void Record(const std::vector<std::size_t>& chosen, SearchResult& result) {
    PartitionCertificate cert{graph_, true, {}};
    for (std::size_t id : chosen) {
      auto& part = cert.parts.emplace_back();
      for (auto k : members_[id]) part.push_back(finder_.matchings()[k]);
    }
    cert.Canonicalize();
    result.partitions.push_back(std::move(cert));
  }

  const FactorizationFinder& finder_;
  const SearchOptions& options_;
  const Graph& graph_;
  std::vector<MatchingBits> factorizations_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::vector<std::size_t>> containing_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

SearchResult FindPerfectPartition(const Graph& graph,
                                  const SearchOptions& options) {
  FactorizationFinder finder(graph);
  const std::size_t count = finder.matchings().size();
  SearchResult result;
  if (count == 0 || finder.degree() == 0) return result;
  if (options.divisibility_precheck &&
      count % static_cast<std::size_t>(finder.degree()) != 0) {
    result.decided_by_precheck = true;
    return result;
  }
  if (count > kPartitionSearchMaxMatchings) {
    throw std::length_error("partition search supports at most " +
                            std::to_string(kPartitionSearchMaxMatchings) +
                            " matchings");
  }
  return PartitionSearch(finder, options, graph).Run();
}

}  // namespace perfpart
