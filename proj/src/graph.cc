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

#include "perfpart/graph.h"

#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace perfpart {
namespace {

std::uint64_t FullMask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void CheckSize(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("matrix size must be in 1.." +
                                std::to_string(kMaxDegree));
  }
}

}  // namespace

Graph::Graph(int n, std::vector<std::uint64_t> rows,
             std::optional<LParams> params)
    : n_(n), rows_(std::move(rows)), l_params_(params) {}

Graph Graph::L(int r, int m) {
  if (r < 1 || m < 1) {
    throw std::invalid_argument("L graph needs r >= 1 and m >= 1");
  }
  const int n = r * m;
  CheckSize(n);
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) {
    const int block = i / r;
    const std::uint64_t forbidden = FullMask(r) << (block * r);
    rows[i] = FullMask(n) & ~forbidden;
  }
  return Graph(n, std::move(rows), LParams{r, m, n});
}

Graph Graph::Complete(int n) {
  CheckSize(n);
  return Graph(n, std::vector<std::uint64_t>(n, FullMask(n)),
               LParams{0, 1, n});
}

Graph Graph::Circulant(int n, const std::vector<int>& powers) {
  CheckSize(n);
  std::vector<std::uint64_t> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k : powers) {
      const int j = ((i + k) % n + n) % n;
      rows[i] |= std::uint64_t{1} << j;
    }
  }
  return Graph(n, std::move(rows), std::nullopt);
}

Graph Graph::FromRows(int n, std::vector<std::uint64_t> rows) {
  CheckSize(n);
  if (static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("matrix must be square");
  }
  for (auto row : rows) {
    if (row & ~FullMask(n)) {
      throw std::invalid_argument("row has bits beyond column n");
    }
  }
  return Graph(n, std::move(rows), std::nullopt);
}

Graph Graph::FromText(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) lines.push_back(line);
  }
  const int n = static_cast<int>(lines.size());
  CheckSize(n);
  std::vector<std::uint64_t> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lines[i].size()) != n) {
      throw std::invalid_argument("matrix row " + std::to_string(i + 1) +
                                  " has length " +
                                  std::to_string(lines[i].size()) +
                                  ", expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const char c = lines[i][j];
      if (c == '1') {
        rows[i] |= std::uint64_t{1} << j;
      } else if (c != '0') {
        throw std::invalid_argument("matrix entries must be '0' or '1'");
      }
    }
  }
  return Graph(n, std::move(rows), std::nullopt);
}

Graph Graph::Adjacency() const { return Graph(n_, rows_, std::nullopt); }

bool Graph::IsRegular() const {
  const int d = std::popcount(rows_[0]);
  std::vector<int> col_sums(n_, 0);
  for (auto row : rows_) {
    if (std::popcount(row) != d) return false;
    for (int j = 0; j < n_; ++j) col_sums[j] += (row >> j) & 1U;
  }
  for (int c : col_sums) {
    if (c != d) return false;
  }
  return true;
}

int Graph::Degree() const {
  if (!IsRegular()) throw std::domain_error("not regular");
  return std::popcount(rows_[0]);
}

bool Graph::IsMatching(const Permutation& p) const {
  if (p.degree() != n_) {
    throw std::invalid_argument("matching degree " +
                                std::to_string(p.degree()) +
                                " does not match graph size " +
                                std::to_string(n_));
  }
  for (int i = 1; i <= n_; ++i) {
    if (!edge(i, p(i))) return false;
  }
  return true;
}

std::vector<std::string> Graph::RowStrings() const {
  std::vector<std::string> out;
  out.reserve(n_);
  for (auto row : rows_) {
    std::string s(n_, '0');
    for (int j = 0; j < n_; ++j) {
      if ((row >> j) & 1U) s[j] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string Graph::ToText() const {
  std::string out;
  for (const auto& s : RowStrings()) out += s + "\n";
  return out;
}

std::string Graph::Name() const {
  if (l_params_) {
    if (l_params_->r == 0) {
      return "K(" + std::to_string(n_) + "," + std::to_string(n_) + ")";
    }
    return "L(" + std::to_string(n_) + "," + std::to_string(l_params_->r) +
           ")";
  }
  return "matrix(" + std::to_string(n_) + ")";
}

BlockMatrix BlockView(const Permutation& p) {
  if (p.degree() != 8) {
    throw std::invalid_argument("block view needs a degree-8 permutation");
  }
  BlockMatrix bm;
  for (int row = 1; row <= 8; ++row) {
    const int col = p(row);
    const int bi = (row - 1) / 2, a = (row - 1) % 2;
    const int bj = (col - 1) / 2, b = (col - 1) % 2;
    bm.blocks[bi][bj] |= static_cast<Block2>(1U << (2 * a + b));
  }
  return bm;
}

std::vector<std::pair<int, int>> InvertibleBlocks(const BlockMatrix& bm) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const Block2 b = bm.block(i, j);
      // A permutation matrix never puts two ones in one row or column.
      assert(std::popcount(static_cast<unsigned>(b)) < 2 || IsInvertible(b));
      if (IsInvertible(b)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace perfpart
