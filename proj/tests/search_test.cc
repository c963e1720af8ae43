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
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "perfpart/golden.h"

namespace perfpart {
namespace {

using Parts = std::vector<std::vector<Permutation>>;

Parts Sorted(Parts parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

// Oracle: every d-subset of matchings whose matrices sum to the adjacency
// matrix, by plain subset enumeration.
Parts BruteForceFactorizations(const Graph& g) {
  MatchingSet ms = Enumerate(g);
  const int d = g.Degree();
  Parts out;
  std::vector<std::size_t> pick;
  std::vector<int> load(g.n() * g.n(), 0);
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == d) {
      auto& part = out.emplace_back();
      for (auto k : pick) part.push_back(ms[k]);
      return;
    }
    for (std::size_t k = from; k < ms.size(); ++k) {
      bool clash = false;
      for (int i = 1; i <= g.n() && !clash; ++i) {
        clash = load[(i - 1) * g.n() + ms[k](i) - 1] > 0;
      }
      if (clash) continue;
      for (int i = 1; i <= g.n(); ++i) ++load[(i - 1) * g.n() + ms[k](i) - 1];
      pick.push_back(k);
      self(self, k + 1);
      pick.pop_back();
      for (int i = 1; i <= g.n(); ++i) --load[(i - 1) * g.n() + ms[k](i) - 1];
    }
  };
  rec(rec, 0);
  return Sorted(out);
}

TEST(FactorizationFinderTest, MatchesBruteForce) {
  for (const Graph& g : {Graph::L(1, 4), Graph::L(1, 5), Graph::Complete(4),
                         Graph::L(2, 3), Graph::Circulant(5, {0, 1, 2})}) {
    EXPECT_EQ(Sorted(FindFactorizations(g)), BruteForceFactorizations(g))
        << g.Name();
  }
}

TEST(FactorizationFinderTest, ForcedMember) {
  Graph g = Graph::L(1, 5);
  Permutation p = ParseCycles("(1 2)(3 4 5)", 5);
  auto with = FindFactorizations(g, p);
  ASSERT_FALSE(with.empty());
  for (const auto& f : with) {
    EXPECT_NE(std::find(f.begin(), f.end(), p), f.end());
  }
  FactorizationFinder finder(g);
  auto first = finder.First(p);
  ASSERT_TRUE(first.has_value());
  EXPECT_TRUE(CheckFactorization(g, *first).ok());
}

TEST(FactorizationFinderTest, Limits) {
  EXPECT_THROW(FactorizationFinder(Graph::Complete(kSearchMaxN + 1)),
               std::length_error);
  EXPECT_THROW(FactorizationFinder(Graph::FromText("11\n01\n")),
               std::domain_error);
}

TEST(PartitionSearchTest, ExampleMatrixHasNone) {
  Graph g = Graph::Circulant(5, {0, 1, 2});
  SearchResult r = FindPerfectPartition(g);
  EXPECT_EQ(r.outcome, SearchOutcome::kNone);
  EXPECT_TRUE(r.decided_by_precheck);

  SearchOptions exhaustive;
  exhaustive.divisibility_precheck = false;
  r = FindPerfectPartition(g, exhaustive);
  EXPECT_EQ(r.outcome, SearchOutcome::kNone);
  EXPECT_FALSE(r.decided_by_precheck);
  EXPECT_TRUE(r.partitions.empty());
}

TEST(PartitionSearchTest, L41IsThePrintedListing) {
  SearchOptions all;
  all.find_all = true;
  SearchResult r = FindPerfectPartition(Graph::L(1, 4), all);
  EXPECT_EQ(r.outcome, SearchOutcome::kFound);
  ASSERT_EQ(r.partitions.size(), 1U);
  EXPECT_TRUE(CheckPartition(r.partitions[0]).ok());
  golden::Diff diff =
      golden::Compare(r.partitions[0].parts, golden::Load("l41").Parts());
  EXPECT_TRUE(diff.empty()) << diff.ToString();
}

TEST(PartitionSearchTest, L51AndL62) {
  SearchResult l51 = FindPerfectPartition(Graph::L(1, 5));
  ASSERT_EQ(l51.outcome, SearchOutcome::kFound);
  EXPECT_EQ(l51.partitions[0].parts.size(), 11U);
  for (const auto& part : l51.partitions[0].parts) EXPECT_EQ(part.size(), 4U);
  EXPECT_TRUE(CheckPartition(l51.partitions[0]).ok());

  SearchResult l62 = FindPerfectPartition(Graph::L(2, 3));
  ASSERT_EQ(l62.outcome, SearchOutcome::kFound);
  EXPECT_EQ(l62.partitions[0].parts.size(), 20U);
  for (const auto& part : l62.partitions[0].parts) EXPECT_EQ(part.size(), 4U);
  EXPECT_TRUE(CheckPartition(l62.partitions[0]).ok());
}

TEST(PartitionSearchTest, BudgetExceeded) {
  SearchOptions tight;
  tight.node_budget = 1;
  tight.find_all = true;
  SearchResult r = FindPerfectPartition(Graph::L(1, 5), tight);
  EXPECT_EQ(r.outcome, SearchOutcome::kBudgetExceeded);
  EXPECT_LE(r.nodes, 1U);
}

TEST(PartitionSearchTest, CompleteGraphs) {
  for (int n = 2; n <= 4; ++n) {
    SearchResult r = FindPerfectPartition(Graph::Complete(n));
    ASSERT_EQ(r.outcome, SearchOutcome::kFound) << n;
    EXPECT_TRUE(CheckPartition(r.partitions[0]).ok());
  }
}

}  // namespace
}  // namespace perfpart
