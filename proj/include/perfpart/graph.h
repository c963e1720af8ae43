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

#ifndef PERFPART_GRAPH_H_
#define PERFPART_GRAPH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perfpart/permutation.h"

namespace perfpart {

// L_{rm,r}: K_{rm,rm} with the m diagonal r x r blocks removed. r == 0
// stands for K_{n,n}, in which case `n` is carried explicitly.
struct LParams {
  int r = 0;
  int m = 1;
  int n = 0;
  friend bool operator==(const LParams&, const LParams&) = default;
};

// A square 0/1 matrix viewed as a bipartite graph: rows are one side,
// columns the other. Rows are stored as bit masks (bit j-1 set iff column j
// is adjacent), so n <= 64.
class Graph {
 public:
  static Graph L(int r, int m);
  static Graph Complete(int n);
  // Circulant sum of P^k over `powers`, P the matrix of the n-cycle
  // (1 2 ... n). {0, 1, 2} on n = 5 gives I + P + P^2.
  static Graph Circulant(int n, const std::vector<int>& powers);
  static Graph FromRows(int n, std::vector<std::uint64_t> rows);
  // n lines of n characters '0'/'1'. Blank lines are ignored.
  static Graph FromText(std::string_view text);

  int n() const { return n_; }
  const std::optional<LParams>& l_params() const { return l_params_; }

  // Mask of columns adjacent to 1-based row i.
  std::uint64_t row(int i) const { return rows_[i - 1]; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  bool edge(int i, int j) const { return (rows_[i - 1] >> (j - 1)) & 1U; }

  // Same matrix with the L parameters dropped.
  Graph Adjacency() const;

  bool IsRegular() const;
  // Common row/column sum. Throws std::domain_error("not regular").
  int Degree() const;

  // True iff every edge (i, p(i)) is present. Throws std::invalid_argument
  // on a degree mismatch.
  bool IsMatching(const Permutation& p) const;

  std::string ToText() const;
  std::vector<std::string> RowStrings() const;
  // "L(6,1)", "K(4,4)" or "matrix(5)".
  std::string Name() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  Graph(int n, std::vector<std::uint64_t> rows,
        std::optional<LParams> params);

  int n_;
  std::vector<std::uint64_t> rows_;
  std::optional<LParams> l_params_;
};

// 2 x 2 block over {0,1}; bit 2*(a-1) + (b-1) holds entry (a, b).
using Block2 = std::uint8_t;
inline constexpr Block2 kIdentity2 = 0b1001;
inline constexpr Block2 kReversal2 = 0b0110;

// Single-one block E_{a,b}, a, b in {1, 2}.
constexpr Block2 EBlock(int a, int b) {
  return static_cast<Block2>(1U << (2 * (a - 1) + (b - 1)));
}

constexpr bool IsInvertible(Block2 b) {
  return b == kIdentity2 || b == kReversal2;
}

// 4 x 4 array of 2 x 2 blocks of an 8 x 8 permutation matrix.
// block(i, j) holds entries (2(i-1)+a, 2(j-1)+b), all indices 1-based.
struct BlockMatrix {
  std::array<std::array<Block2, 4>, 4> blocks{};
  Block2 block(int i, int j) const { return blocks[i - 1][j - 1]; }
};

// Throws std::invalid_argument unless p has degree 8.
BlockMatrix BlockView(const Permutation& p);
// Positions (i, j), 1-based, of blocks equal to I_2 or R_2, row-major.
std::vector<std::pair<int, int>> InvertibleBlocks(const BlockMatrix& bm);

}  // namespace perfpart

#endif  // PERFPART_GRAPH_H_
