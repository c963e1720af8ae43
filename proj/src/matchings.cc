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

#include "perfpart/matchings.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace perfpart {

MatchingSet::MatchingSet(Graph graph, std::vector<Permutation> perms)
    : graph_(std::move(graph)), perms_(std::move(perms)) {
  std::sort(perms_.begin(), perms_.end());
  index_.reserve(perms_.size());
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    index_.emplace(perms_[i].Key(), i);
  }
}

std::optional<std::size_t> MatchingSet::IndexOf(const Permutation& p) const {
  if (p.degree() != graph_.n()) return std::nullopt;
  auto it = index_.find(p.Key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void Extend(const Graph& graph, int row, std::uint64_t used,
            std::vector<int>& images, std::vector<Permutation>& out) {
  const int n = graph.n();
  if (row > n) {
    out.emplace_back(std::span<const int>(images));
    return;
  }
  for (std::uint64_t free = graph.row(row) & ~used; free; free &= free - 1) {
    const int col = std::countr_zero(free);
    images[row - 1] = col + 1;
    Extend(graph, row + 1, used | (std::uint64_t{1} << col), images, out);
  }
}

bool IsL(const Graph& g, int r, int m) {
  const auto& p = g.l_params();
  if (p) return p->r == r && p->m == m;
  return g == Graph::L(r, m);
}

}  // namespace

MatchingSet Enumerate(const Graph& graph) {
  if (graph.n() > kEnumerateMaxN) {
    throw std::length_error("enumeration supports n <= " +
                            std::to_string(kEnumerateMaxN));
  }
  std::vector<Permutation> out;
  std::vector<int> images(graph.n());
  Extend(graph, 1, 0, images, out);
  return MatchingSet(graph, std::move(out));
}

CycleClassification ClassifyL61(const MatchingSet& ms) {
  if (!IsL(ms.graph(), 1, 6)) {
    throw std::invalid_argument("cycle classification needs L(6,1)");
  }
  CycleClassification c;
  for (const auto& p : ms.perms()) {
    const CycleType type = CycleTypeOf(p);
    if (type == CycleType{6}) {
      c.c6.push_back(p);
    } else if (type == CycleType{3, 3}) {
      c.c33.push_back(p);
    } else if (type == CycleType{2, 4}) {
      c.c24.push_back(p);
      if (p(p(1)) == 1) c.c24_0.push_back(p);
    } else if (type == CycleType{2, 2, 2}) {
      c.c222.push_back(p);
    } else {
      throw std::logic_error("derangement of 6 with unexpected cycle type");
    }
  }
  return c;
}

L82Class ClassOfL82(const Permutation& p) {
  const BlockMatrix bm = BlockView(p);
  switch (InvertibleBlocks(bm).size()) {
    case 1:
      return L82Class::kS1;
    case 2:
      return L82Class::kS2;
    case 4:
      return L82Class::kS4;
    case 0:
      break;
    default:
      return L82Class::kOther;
  }
  // Off-diagonal zero block of each block row; the pattern is a block
  // derangement, and an involution marks S0^1.
  int zero_col[4] = {-1, -1, -1, -1};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && bm.blocks[i][j] == 0) zero_col[i] = j;
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (zero_col[i] < 0 || zero_col[zero_col[i]] != i) return L82Class::kS0Rest;
  }
  return L82Class::kS0One;
}

std::string ToString(L82Class c) {
  switch (c) {
    case L82Class::kS0One:
      return "S0^1";
    case L82Class::kS0Rest:
      return "S0-S0^1";
    case L82Class::kS1:
      return "S1";
    case L82Class::kS2:
      return "S2";
    case L82Class::kS4:
      return "S4";
    case L82Class::kOther:
      break;
  }
  return "other";
}

BlockClassification ClassifyL82(const MatchingSet& ms) {
  if (!IsL(ms.graph(), 2, 4)) {
    throw std::invalid_argument("block classification needs L(8,2)");
  }
  BlockClassification c;
  for (const auto& p : ms.perms()) {
    switch (ClassOfL82(p)) {
      case L82Class::kS0One:
        c.s0_1.push_back(p);
        c.s0.push_back(p);
        break;
      case L82Class::kS0Rest:
        c.s0.push_back(p);
        break;
      case L82Class::kS1:
        c.s1.push_back(p);
        break;
      case L82Class::kS2:
        c.s2.push_back(p);
        break;
      case L82Class::kS4:
        c.s4.push_back(p);
        break;
      case L82Class::kOther:
        c.other.push_back(p);
        break;
    }
  }
  return c;
}

}  // namespace perfpart
