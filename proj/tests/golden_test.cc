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

#include "perfpart/golden.h"

#include <algorithm>
#include <stdexcept>

#include <gtest/gtest.h>

namespace perfpart::golden {
namespace {

TEST(GoldenTest, ParsesRowsAndErrata) {
  Table t = Parse("demo",
                  "# demo table\n"
                  "# n 4\n"
                  "(12)(34) & (1 3 2 4) & (1,4,2,3)\n"
                  "(1 3)(2 4) & (1 2 3 4) & (1 4 3 2)\n"
                  "@erratum 2: (1 2 3 4) => (1 2 4 3)\n");
  EXPECT_EQ(t.n, 4);
  ASSERT_EQ(t.rows.size(), 2U);
  ASSERT_EQ(t.errata.size(), 1U);
  EXPECT_EQ(t.errata[0].row, 2);
  auto printed = t.PrintedParts();
  auto fixed = t.Parts();
  EXPECT_EQ(printed[0], fixed[0]);
  EXPECT_NE(printed[1], fixed[1]);
  EXPECT_TRUE(std::is_sorted(fixed[1].begin(), fixed[1].end()));
}

TEST(GoldenTest, RejectsMalformed) {
  EXPECT_THROW(Parse("x", "(1 2)\n"), std::invalid_argument);  // no n
  EXPECT_THROW(Parse("x", "# n 3\n(1 2 & (2 3)\n"), std::invalid_argument);
  EXPECT_THROW(Parse("x", "# n 3\n(1 2)\n@erratum 2: (1 2) => (2 3)\n"),
               std::invalid_argument);
  EXPECT_THROW(Parse("x", "# n 3\n(1 2)\n@erratum 1: (1 3) => (2 3)\n"),
               std::invalid_argument);
}

TEST(GoldenTest, EmbeddedTablesLoad) {
  for (const auto& name : TableNames()) {
    Table t = Load(name);
    EXPECT_FALSE(t.rows.empty()) << name;
  }
  EXPECT_EQ(Load("t1").rows.size(), 30U);
  EXPECT_EQ(Load("t3").rows.size(), 3U);
  EXPECT_EQ(Load("t4").rows.size(), 4U);
  EXPECT_EQ(Load("zone2").rows.size(), 4U);
  EXPECT_EQ(Load("l41").n, 4);
  EXPECT_THROW(Load("nope"), std::invalid_argument);
}

TEST(GoldenTest, CompareIgnoresOrder) {
  Part a{ParseCycles("(1 2)", 3), ParseCycles("(2 3)", 3)};
  Part b{ParseCycles("(1 3)", 3)};
  Part a_rev{a[1], a[0]};
  EXPECT_TRUE(Compare({a, b}, {b, a_rev}).empty());
  Diff d = Compare({a}, {b});
  EXPECT_EQ(d.missing.size(), 1U);
  EXPECT_EQ(d.unexpected.size(), 1U);
  EXPECT_FALSE(d.ToString().empty());
}

}  // namespace
}  // namespace perfpart::golden
