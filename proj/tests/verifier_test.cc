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

#include "perfpart/verifier.h"

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "perfpart/construct_group.h"
#include "perfpart/matchings.h"

namespace perfpart {
namespace {

using Kind = Violation::Kind;

bool Has(const Report& r, Kind kind) {
  for (const auto& v : r.violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

// Independent factorization check: the permutation matrices sum to the
// adjacency matrix entry by entry.
bool SumsToAdjacency(const Graph& g, const std::vector<Permutation>& part) {
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = 1; j <= g.n(); ++j) {
      int sum = 0;
      for (const auto& p : part) sum += p(i) == j;
      if (sum != static_cast<int>(g.edge(i, j))) return false;
    }
  }
  return true;
}

std::vector<Permutation> L41Part() {
  return {ParseCycles("(1 2)(3 4)", 4), ParseCycles("(1 3 2 4)", 4),
          ParseCycles("(1 4 2 3)", 4)};
}

TEST(VerifierTest, AcceptsFactorization) {
  Graph g = Graph::L(1, 4);
  auto part = L41Part();
  EXPECT_TRUE(SumsToAdjacency(g, part));
  EXPECT_TRUE(CheckFactorization(g, part).ok());
}

TEST(VerifierTest, AgreesWithOracleOnAllTriples) {
  Graph g = Graph::L(1, 4);
  MatchingSet ms = Enumerate(g);
  int factorizations = 0;
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = a + 1; b < ms.size(); ++b) {
      for (std::size_t c = b + 1; c < ms.size(); ++c) {
        std::vector<Permutation> part{ms[a], ms[b], ms[c]};
        bool ok = CheckFactorization(g, part).ok();
        EXPECT_EQ(ok, SumsToAdjacency(g, part));
        factorizations += ok;
      }
    }
  }
  // The three listed ones plus {(1 2)(3 4), (1 3)(2 4), (1 4)(2 3)}.
  EXPECT_EQ(factorizations, 4);
}

TEST(VerifierTest, RejectsBadParts) {
  Graph g = Graph::L(1, 4);
  auto part = L41Part();
  part.pop_back();
  EXPECT_TRUE(Has(CheckFactorization(g, part), Kind::kWrongSize));

  part = L41Part();
  part[2] = Permutation::Identity(4);
  EXPECT_TRUE(Has(CheckFactorization(g, part), Kind::kNotMatching));

  part = L41Part();
  part[2] = part[1];
  EXPECT_TRUE(Has(CheckFactorization(g, part), Kind::kDoubledEdge));

  part = L41Part();
  part[0] = ParseCycles("(1 2)", 2);
  EXPECT_TRUE(Has(CheckFactorization(g, part), Kind::kDegreeMismatch));

  Graph irregular = Graph::FromText("11\n01\n");
  EXPECT_TRUE(Has(CheckFactorization(irregular, {}), Kind::kIrregularGraph));
}

TEST(VerifierTest, PartitionChecks) {
  PartitionCertificate good = KnnPartition(4);
  EXPECT_TRUE(CheckPartition(good).ok());

  PartitionCertificate overlap = good;
  overlap.parts.push_back(overlap.parts.front());
  Report r = CheckPartition(overlap);
  EXPECT_TRUE(Has(r, Kind::kOverlap));
  EXPECT_TRUE(Has(r, Kind::kCountMismatch));

  PartitionCertificate missing = good;
  missing.parts.pop_back();
  r = CheckPartition(missing);
  EXPECT_TRUE(Has(r, Kind::kMissingMatching));
  missing.complete = false;
  EXPECT_TRUE(CheckPartition(missing).ok());

  PartitionCertificate bad_part = good;
  bad_part.parts[3][0] = bad_part.parts[4][0];
  r = CheckPartition(bad_part);
  ASSERT_FALSE(r.ok());
  bool located = false;
  for (const auto& v : r.violations) {
    if (v.kind == Kind::kDoubledEdge || v.kind == Kind::kUncoveredEdge) {
      located |= v.parts == std::vector<std::size_t>{3};
    }
  }
  EXPECT_TRUE(located);
}

TEST(VerifierTest, Canonicalize) {
  PartitionCertificate cert = KnnPartition(3);
  std::reverse(cert.parts.begin(), cert.parts.end());
  for (auto& part : cert.parts) std::reverse(part.begin(), part.end());
  cert.Canonicalize();
  EXPECT_TRUE(std::is_sorted(cert.parts.begin(), cert.parts.end()));
  for (const auto& part : cert.parts) {
    EXPECT_TRUE(std::is_sorted(part.begin(), part.end()));
  }
  EXPECT_EQ(cert.MatchingCount(), 6U);
}

TEST(VerifierTest, Extendability) {
  ExtendabilityResult k44 = CheckExtendability(Graph::Complete(4));
  EXPECT_TRUE(k44.ok);
  EXPECT_EQ(k44.checked, 24U);
  ExtendabilityResult l61 = CheckExtendability(Graph::L(1, 6));
  EXPECT_TRUE(l61.ok);
  EXPECT_EQ(l61.checked, 265U);
}

TEST(VerifierTest, ExtendabilityOfExampleMatrix) {
  // Removing a matching leaves a regular graph, so every matching extends
  // even though no perfect partition exists.
  ExtendabilityResult r = CheckExtendability(Graph::Circulant(5, {0, 1, 2}));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.checked, 13U);
  EXPECT_FALSE(r.counterexample.has_value());
}

}  // namespace
}  // namespace perfpart
