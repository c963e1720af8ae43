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

#include "perfpart/permutation.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace perfpart {
namespace {

Permutation RandomPermutation(int n, std::mt19937& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

TEST(PermutationTest, RejectsNonBijection) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
}

TEST(PermutationTest, IdentityAndFixedPoints) {
  Permutation id = Permutation::Identity(5);
  EXPECT_TRUE(id.IsIdentity());
  EXPECT_EQ(id.FixedPoints(), 5);
  EXPECT_EQ(ToCycleString(id), "()");
  Permutation p{2, 1, 3};
  EXPECT_FALSE(p.IsIdentity());
  EXPECT_EQ(p.FixedPoints(), 1);
}

TEST(PermutationTest, ParseCanonicalForm) {
  Permutation p = ParseCycles("(4 5 6)(3 1 2)", 6);
  EXPECT_EQ(p, (Permutation{2, 3, 1, 5, 6, 4}));
  EXPECT_EQ(ToCycleString(p), "(1 2 3)(4 5 6)");
}

TEST(PermutationTest, ParseSeparators) {
  Permutation spaced = ParseCycles("(1 3 2 4)", 4);
  EXPECT_EQ(ParseCycles("(1,3,2,4)", 4), spaced);
  EXPECT_EQ(ParseCycles("( 1 , 3 ,2 4 )", 4), spaced);
  EXPECT_EQ(ParseCycles("(1324)", 4), spaced);
  EXPECT_EQ(ParseCycles("(12)(43)(56)", 6),
            ParseCycles("(1 2)(3 4)(5 6)", 6));
}

TEST(PermutationTest, ParseIdentity) {
  EXPECT_TRUE(ParseCycles("", 3).IsIdentity());
  EXPECT_TRUE(ParseCycles("()", 3).IsIdentity());
  EXPECT_TRUE(ParseCycles("(2)", 3).IsIdentity());
}

TEST(PermutationTest, ParseRejectsMalformed) {
  EXPECT_THROW(ParseCycles("(1 2 2)", 3), std::invalid_argument);
  EXPECT_THROW(ParseCycles("(1 2)(2 3)", 3), std::invalid_argument);
  EXPECT_THROW(ParseCycles("(1 4)", 3), std::invalid_argument);
  EXPECT_THROW(ParseCycles("(1 2", 3), std::invalid_argument);
  EXPECT_THROW(ParseCycles("1 2)", 3), std::invalid_argument);
  EXPECT_THROW(ParseCycles("((1 2))", 3), std::invalid_argument);
  EXPECT_THROW(ParseCycles("(1 x)", 3), std::invalid_argument);
}

TEST(PermutationTest, MultiDigitPoints) {
  Permutation p = ParseCycles("(1 12)(10 11)", 12);
  EXPECT_EQ(p(1), 12);
  EXPECT_EQ(p(10), 11);
  EXPECT_EQ(ToCycleString(p), "(1 12)(10 11)");
}

TEST(PermutationTest, ComposeAppliesRightFirst) {
  Permutation a = ParseCycles("(1 2)", 3);
  Permutation b = ParseCycles("(2 3)", 3);
  // a(b(2)) = a(3) = 3.
  EXPECT_EQ(Compose(a, b)(2), 3);
  EXPECT_EQ(Compose(a, b), ParseCycles("(1 2 3)", 3));
  EXPECT_THROW(Compose(a, Permutation::Identity(4)), std::invalid_argument);
}

TEST(PermutationTest, RoundTripAndGroupLaws) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 12;
    Permutation p = RandomPermutation(n, rng);
    Permutation q = RandomPermutation(n, rng);
    Permutation s = RandomPermutation(n, rng);
    EXPECT_EQ(ParseCycles(ToCycleString(p), n), p);
    EXPECT_TRUE(Compose(p, Inverse(p)).IsIdentity());
    EXPECT_TRUE(Compose(Inverse(p), p).IsIdentity());
    EXPECT_EQ(Compose(Compose(p, q), s), Compose(p, Compose(q, s)));
    EXPECT_EQ(Inverse(Compose(p, q)), Compose(Inverse(q), Inverse(p)));
    CycleType type = CycleTypeOf(p);
    EXPECT_EQ(std::accumulate(type.begin(), type.end(), 0), n);
    EXPECT_TRUE(std::is_sorted(type.begin(), type.end()));
    EXPECT_EQ(CycleTypeOf(Inverse(p)), type);
    EXPECT_EQ(CycleTypeOf(Compose(Compose(q, p), Inverse(q))), type);
  }
}

TEST(PermutationTest, CycleFormIsCanonical) {
  CycleForm form = ToCycles(ParseCycles("(5 3)(4 1 2)", 5));
  ASSERT_EQ(form.cycles.size(), 2U);
  EXPECT_EQ(form.cycles[0], (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(form.cycles[1], (std::vector<int>{3, 5}));
}

TEST(PermutationTest, KeyIsInjective) {
  std::vector<int> images{1, 2, 3, 4, 5};
  std::vector<std::uint64_t> keys;
  do {
    keys.push_back(Permutation(images).Key());
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
  EXPECT_EQ(keys.size(), 120U);
}

TEST(PermutationTest, OrderIsLexicographic) {
  EXPECT_LT((Permutation{1, 2, 3}), (Permutation{1, 3, 2}));
  EXPECT_LT((Permutation{1, 3, 2}), (Permutation{2, 1, 3}));
  std::vector<Permutation> v{{2, 1}, {1, 2}, {2, 1}};
  Canonicalize(v);
  ASSERT_EQ(v.size(), 2U);
  EXPECT_EQ(v[0], (Permutation{1, 2}));
}

}  // namespace
}  // namespace perfpart
