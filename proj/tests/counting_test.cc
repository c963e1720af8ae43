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

#include "perfpart/counting.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace perfpart {
namespace {

// Brute force over all n! permutations.
BigInt BruteForceCount(const Graph& g) {
  std::vector<int> images(g.n());
  std::iota(images.begin(), images.end(), 1);
  BigInt count = 0;
  do {
    bool ok = true;
    for (int i = 1; i <= g.n() && ok; ++i) ok = g.edge(i, images[i - 1]);
    if (ok) ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

// D_n = n D_{n-1} + (-1)^n.
BigInt Derangements(int n) {
  BigInt d = 1;
  for (int k = 1; k <= n; ++k) d = d * k + (k % 2 == 0 ? 1 : -1);
  return d;
}

TEST(CountingTest, FactorialAndBinomial) {
  EXPECT_EQ(Factorial(0), 1);
  EXPECT_EQ(Factorial(10), 3628800);
  EXPECT_EQ(Binomial(6, 2), 15);
  EXPECT_EQ(Binomial(3, 5), 0);
  EXPECT_EQ(ToString(Factorial(25)), "15511210043330985984000000");
}

TEST(CountingTest, PolynomialArithmetic) {
  IntPolynomial one_plus_x({1, 1});
  EXPECT_EQ(one_plus_x.Pow(3), IntPolynomial({1, 3, 3, 1}));
  EXPECT_EQ(IntPolynomial({0, 0}).degree(), -1);
  EXPECT_EQ(one_plus_x.Pow(0), IntPolynomial({1}));
  EXPECT_EQ(one_plus_x.coefficient(7), 0);
}

TEST(CountingTest, RookBlock) {
  EXPECT_EQ(RookBlock(1), IntPolynomial({1, 1}));
  EXPECT_EQ(RookBlock(2), IntPolynomial({1, 4, 2}));
  EXPECT_EQ(RookBlock(3), IntPolynomial({1, 9, 18, 6}));
}

TEST(CountingTest, ThreeWayAgreementOnSmallL) {
  for (int r = 1; r <= 9; ++r) {
    for (int m = 1; r * m <= 9; ++m) {
      Graph g = Graph::L(r, m);
      BigInt rook = CountMatchings(r, m);
      EXPECT_EQ(rook, RyserPermanent(g)) << "r=" << r << " m=" << m;
      EXPECT_EQ(rook, BruteForceCount(g)) << "r=" << r << " m=" << m;
    }
  }
}

TEST(CountingTest, CompleteGraph) {
  for (int n = 1; n <= 7; ++n) {
    LParams params{0, 1, n};
    EXPECT_EQ(CountMatchings(params), Factorial(n));
    EXPECT_EQ(RyserPermanent(Graph::Complete(n)), Factorial(n));
  }
}

TEST(CountingTest, DerangementsAreL1m) {
  for (int m = 1; m <= 14; ++m) {
    EXPECT_EQ(CountMatchings(1, m), Derangements(m)) << m;
  }
  EXPECT_EQ(CountMatchings(1, 6), 265);
  EXPECT_EQ(CountMatchings(2, 4), 4752);
}

TEST(CountingTest, RyserOnExampleMatrix) {
  Graph g = Graph::Circulant(5, {0, 1, 2});
  EXPECT_EQ(RyserPermanent(g), 13);
  EXPECT_EQ(BruteForceCount(g), 13);
}

TEST(CountingTest, RyserLargerAgreesWithRook) {
  EXPECT_EQ(RyserPermanent(Graph::L(1, 12)), CountMatchings(1, 12));
  EXPECT_EQ(RyserPermanent(Graph::L(3, 4)), CountMatchings(3, 4));
}

TEST(CountingTest, NecessaryCondition) {
  CountReport l61 = NecessaryCondition(Graph::L(1, 6), true);
  EXPECT_EQ(l61.degree, 5);
  EXPECT_TRUE(l61.divisible);
  EXPECT_EQ(*l61.rook_count, 265);
  EXPECT_EQ(*l61.oracle_count, 265);
  EXPECT_EQ(*l61.parts(), 53);

  CountReport l82 = NecessaryCondition(Graph::L(2, 4));
  EXPECT_EQ(l82.count(), 4752);
  EXPECT_EQ(*l82.parts(), 792);
  EXPECT_FALSE(l82.oracle_count.has_value());

  CountReport ex = NecessaryCondition(Graph::Circulant(5, {0, 1, 2}));
  EXPECT_FALSE(ex.rook_count.has_value());
  EXPECT_EQ(ex.count(), 13);
  EXPECT_EQ(ex.degree, 3);
  EXPECT_FALSE(ex.divisible);
  EXPECT_FALSE(ex.parts().has_value());

  // L(1,7): 1854 derangements, degree 6, 309 parts.
  EXPECT_EQ(*NecessaryCondition(Graph::L(1, 7)).parts(), 309);
  // L(1,4): 9 derangements of degree 3.
  EXPECT_EQ(*NecessaryCondition(Graph::L(1, 4)).parts(), 3);
}

TEST(CountingTest, NecessaryConditionRejectsIrregular) {
  EXPECT_THROW(NecessaryCondition(Graph::FromText("11\n01\n")),
               std::domain_error);
}

}  // namespace
}  // namespace perfpart
