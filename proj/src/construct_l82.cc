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

#include "perfpart/construct_l82.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <utility>

#include "perfpart/search.h"

namespace perfpart::l82 {
namespace {

using Pos = std::pair<int, int>;

// Maps every set entry (a, b) of a block through `f`.
template <typename F>
Block2 MapEntries(Block2 b, F f) {
  Block2 out = 0;
  for (int a = 1; a <= 2; ++a) {
    for (int c = 1; c <= 2; ++c) {
      if (b & EBlock(a, c)) {
        auto [a2, c2] = f(a, c);
        out |= EBlock(a2, c2);
      }
    }
  }
  return out;
}

// Row / column of the single one in an E block.
int RowOf(Block2 e) { return std::countr_zero(static_cast<unsigned>(e)) / 2 + 1; }
int ColOf(Block2 e) { return std::countr_zero(static_cast<unsigned>(e)) % 2 + 1; }

bool IsE(Block2 b) { return std::popcount(static_cast<unsigned>(b)) == 1; }

int Partner(int point) { return point % 2 == 1 ? point + 1 : point - 1; }

// Fills in the E blocks of an S0 matrix. `e_positions` lists the two
// off-diagonal one-carrying blocks of every block row and column; each
// unknown block takes the row unused by its row neighbour and the column
// unused by its column neighbour.
BlockMatrix CompleteS0(const std::vector<Pos>& e_positions,
                       const std::map<Pos, Block2>& known) {
  std::map<Pos, Block2> blocks = known;
  bool progress = true;
  while (progress && blocks.size() < e_positions.size()) {
    progress = false;
    for (const auto& pos : e_positions) {
      if (blocks.contains(pos)) continue;
      const auto [r, c] = pos;
      std::optional<Pos> row_mate, col_mate;
      for (const auto& other : e_positions) {
        if (other == pos) continue;
        if (other.first == r) row_mate = other;
        if (other.second == c) col_mate = other;
      }
      if (!row_mate || !col_mate || !blocks.contains(*row_mate) ||
          !blocks.contains(*col_mate)) {
        continue;
      }
      blocks[pos] = EBlock(3 - RowOf(blocks[*row_mate]),
                           3 - ColOf(blocks[*col_mate]));
      progress = true;
    }
  }
  if (blocks.size() != e_positions.size()) {
    throw std::logic_error("E blocks not determined by the given blocks");
  }
  BlockMatrix bm;
  for (const auto& [pos, b] : blocks) bm.blocks[pos.first - 1][pos.second - 1] = b;
  return bm;
}

// Off-diagonal positions minus `zeros`.
std::vector<Pos> EPositions(const std::vector<Pos>& zeros) {
  std::vector<Pos> out;
  for (int r = 1; r <= 4; ++r) {
    for (int c = 1; c <= 4; ++c) {
      if (r != c && std::find(zeros.begin(), zeros.end(), Pos{r, c}) == zeros.end()) {
        out.emplace_back(r, c);
      }
    }
  }
  return out;
}

const Graph& L82() {
  static const Graph graph = Graph::L(2, 4);
  return graph;
}

// The single invertible block of an S1 member, if it is one.
std::optional<Pos> SoleInvertible(const Permutation& p) {
  const auto inv = InvertibleBlocks(BlockView(p));
  if (inv.size() != 1) return std::nullopt;
  return inv[0];
}

}  // namespace

Block2 Complement(Block2 b) {
  return MapEntries(b, [](int a, int c) { return std::pair{3 - a, 3 - c}; });
}
Block2 RowFlip(Block2 b) {
  return MapEntries(b, [](int a, int c) { return std::pair{3 - a, c}; });
}
Block2 ColFlip(Block2 b) {
  return MapEntries(b, [](int a, int c) { return std::pair{a, 3 - c}; });
}

Permutation FromBlocks(const BlockMatrix& bm) {
  std::vector<int> images(8, 0);
  for (int row = 1; row <= 8; ++row) {
    const int bi = (row - 1) / 2, a = (row - 1) % 2 + 1;
    for (int bj = 0; bj < 4; ++bj) {
      for (int c = 1; c <= 2; ++c) {
        if (!(bm.blocks[bi][bj] & EBlock(a, c))) continue;
        if (images[row - 1] != 0) {
          throw std::invalid_argument("block matrix row " +
                                      std::to_string(row) + " has two ones");
        }
        images[row - 1] = 2 * bj + c;
      }
    }
    if (images[row - 1] == 0) {
      throw std::invalid_argument("block matrix row " + std::to_string(row) +
                                  " is empty");
    }
  }
  return Permutation(images);
}

Permutation SwapRowsInBlocks(const Permutation& p) {
  std::vector<int> images(8);
  for (int r = 1; r <= 8; ++r) images[r - 1] = p(Partner(r));
  return Permutation(images);
}

Permutation SwapColsInBlocks(const Permutation& p) {
  std::vector<int> images(8);
  for (int r = 1; r <= 8; ++r) images[r - 1] = Partner(p(r));
  return Permutation(images);
}

Permutation ComplementBlocks(const Permutation& p) {
  return SwapColsInBlocks(SwapRowsInBlocks(p));
}

Permutation SwapRowsInBlockRow(const Permutation& p, int r) {
  std::vector<int> images = p.images();
  std::swap(images[2 * r - 2], images[2 * r - 1]);
  return Permutation(images);
}

std::array<ZeroPattern, 3> ZeroPatterns() {
  return {ZeroPattern{2, 3, 4}, ZeroPattern{3, 2, 4}, ZeroPattern{4, 2, 3}};
}

Type1Part Type1(const ZeroPattern& pattern, const FreeBlocks& free) {
  const auto [i, j, k] = pattern;
  for (Block2 b : free) {
    if (!IsE(b)) throw std::invalid_argument("free blocks must be E blocks");
  }
  const auto e_positions = EPositions({{1, i}, {i, 1}, {j, k}, {k, j}});
  const BlockMatrix pb = CompleteS0(
      e_positions,
      {{{1, j}, free[0]}, {{i, k}, free[1]}, {{j, 1}, free[2]}, {{k, i}, free[3]}});
  const Permutation p = FromBlocks(pb);
  const Permutation q = ComplementBlocks(p);

  const Block2 pk1 = pb.block(k, 1);

  std::vector<Type1Part> found;
  for (const auto& rest : ResidualDecompositions({p, q})) {
    std::map<Pos, Permutation> by_pos;
    for (const auto& m : rest) {
      if (auto pos = SoleInvertible(m)) by_pos.emplace(*pos, m);
    }
    const Pos s_pos{1, i}, t_pos{i, 1}, u_pos{j, k}, v_pos{k, j};
    if (by_pos.size() != 4 || !by_pos.contains(s_pos) ||
        !by_pos.contains(t_pos) || !by_pos.contains(u_pos) ||
        !by_pos.contains(v_pos)) {
      continue;
    }
    const Permutation& t = by_pos.at(t_pos);
    const Permutation& v = by_pos.at(v_pos);
    const Block2 t1j = BlockView(t).block(1, j);
    const Block2 vj1 = BlockView(v).block(j, 1);
    if (!IsE(t1j) || !IsE(vj1) || RowOf(t1j) != RowOf(pk1) ||
        RowOf(vj1) != ColOf(pk1)) {
      continue;
    }
    found.push_back({p, q, by_pos.at(s_pos), t, by_pos.at(u_pos), v});
  }
  if (found.size() != 1) {
    throw std::logic_error("type I completion of " + ToCycleString(p) +
                           " has " + std::to_string(found.size()) +
                           " solutions, expected one");
  }
  return found[0];
}

std::vector<Type1Part> BuildType1() {
  const Block2 e[4] = {EBlock(1, 1), EBlock(1, 2), EBlock(2, 1), EBlock(2, 2)};
  std::vector<Type1Part> parts;
  for (const auto& pattern : ZeroPatterns()) {
    for (int f0 = 0; f0 < 2; ++f0) {
      for (int f1 = 0; f1 < 4; ++f1) {
        for (int f2 = 0; f2 < 4; ++f2) {
          for (int f3 = 0; f3 < 4; ++f3) {
            parts.push_back(Type1(pattern, {e[f0], e[f1], e[f2], e[f3]}));
          }
        }
      }
    }
  }
  return parts;
}

std::array<BlockCycle, 3> BlockCycles() {
  return {BlockCycle{2, 3, 4}, BlockCycle{2, 4, 3}, BlockCycle{3, 2, 4}};
}

Type2Family Type2Matrices(const BlockCycle& cycle, const ChordBlocks& chords) {
  const auto [i, j, k] = cycle;
  for (Block2 b : chords) {
    if (!IsE(b)) throw std::invalid_argument("chord blocks must be E blocks");
  }
  const std::map<Pos, Block2> known{{{1, j}, chords[0]},
                                    {{j, 1}, chords[1]},
                                    {{k, i}, chords[2]},
                                    {{i, k}, chords[3]}};
  const Permutation a1 =
      FromBlocks(CompleteS0(EPositions({{1, i}, {i, j}, {j, k}, {k, 1}}), known));
  const Permutation b1 =
      FromBlocks(CompleteS0(EPositions({{1, k}, {k, j}, {j, i}, {i, 1}}), known));
  auto family = [](const Permutation& first) {
    const Permutation second = ComplementBlocks(first);
    return std::array<Permutation, 4>{first, second, SwapRowsInBlocks(second),
                                      SwapColsInBlocks(second)};
  };
  return {family(a1), family(b1)};
}

std::vector<Part> ResidualDecompositions(const std::vector<Permutation>& members) {
  std::vector<std::uint64_t> rows = L82().rows();
  for (const auto& m : members) {
    for (int r = 1; r <= 8; ++r) {
      const std::uint64_t bit = std::uint64_t{1} << (m(r) - 1);
      if (!(rows[r - 1] & bit)) return {};
      rows[r - 1] &= ~bit;
    }
  }
  const Graph residual = Graph::FromRows(8, rows);
  if (!residual.IsRegular()) return {};
  auto out = FactorizationFinder(residual).All();
  for (auto& part : out) std::sort(part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::array<Part, 2> Type2Groups(const BlockCycle& cycle,
                                const ChordBlocks& chords) {
  const Type2Family fam = Type2Matrices(cycle, chords);
  return {Part{fam.a[0], fam.a[1], fam.b[2], fam.b[3]},
          Part{fam.b[0], fam.b[1], fam.a[2], fam.a[3]}};
}

std::vector<Part> S2Completions(const Part& group) {
  std::vector<Part> out;
  for (auto& pair : ResidualDecompositions(group)) {
    if (pair.size() == 2 && ClassOfL82(pair[0]) == L82Class::kS2 &&
        ClassOfL82(pair[1]) == L82Class::kS2) {
      out.push_back(std::move(pair));
    }
  }
  return out;
}

std::array<Part, 2> Type2Parts(const BlockCycle& cycle,
                               const ChordBlocks& chords) {
  const auto [i, j, k] = cycle;
  const Block2 chord_ki = chords[2];
  const std::array<Part, 2> groups = Type2Groups(cycle, chords);
  std::array<Part, 2> parts;
  for (int g = 0; g < 2; ++g) {
    // Wanted shape and E row, from the (k,i) chord.
    const bool row_one = (RowOf(chord_ki) == 2) == (g == 0);
    const int e_row = g == 0 ? 3 - ColOf(chord_ki) : ColOf(chord_ki);
    std::vector<Part> picked;
    for (auto& pair : S2Completions(groups[g])) {
      for (const auto& b : pair) {
        const BlockMatrix bm = BlockView(b);
        const Block2 e = row_one ? bm.block(i, 1) : bm.block(1, i);
        if (IsInvertible(row_one ? bm.block(1, i) : bm.block(i, 1)) &&
            IsE(e) && RowOf(e) == e_row) {
          picked.push_back(pair);
        }
      }
    }
    if (picked.size() != 1) {
      throw std::logic_error("type II group of " + ToCycleString(groups[g][0]) +
                             " has " + std::to_string(picked.size()) +
                             " matching S2 completions, expected one");
    }
    parts[g] = groups[g];
    parts[g].insert(parts[g].end(), picked[0].begin(), picked[0].end());
    std::sort(parts[g].begin(), parts[g].end());
  }
  return parts;
}

std::vector<Part> Type2SingleFamilyResiduals(const BlockCycle& cycle,
                                             const ChordBlocks& chords) {
  const Type2Family fam = Type2Matrices(cycle, chords);
  return ResidualDecompositions({fam.a.begin(), fam.a.end()});
}

namespace {

ChordBlocks ChordsFromIndex(int c) {
  const Block2 e[4] = {EBlock(1, 1), EBlock(1, 2), EBlock(2, 1), EBlock(2, 2)};
  return {e[c & 3], e[(c >> 2) & 3], e[(c >> 4) & 3], e[(c >> 6) & 3]};
}

}  // namespace

Type2Audit AuditType2Groups() {
  std::set<Part> distinct;
  std::size_t raw = 0;
  for (const auto& cycle : BlockCycles()) {
    for (int c = 0; c < 256; ++c) {
      for (auto group : Type2Groups(cycle, ChordsFromIndex(c))) {
        std::sort(group.begin(), group.end());
        ++raw;
        distinct.insert(std::move(group));
      }
    }
  }
  return {raw, distinct.size()};
}

std::vector<Part> BuildType2() {
  std::vector<Part> parts;
  for (const auto& cycle : BlockCycles()) {
    // Chord (i,k) fixed to E11; the other three chords are free.
    for (int c = 0; c < 64; ++c) {
      for (auto& part : Type2Parts(cycle, ChordsFromIndex(c))) {
        parts.push_back(std::move(part));
      }
    }
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::array<std::array<Permutation, 3>, 3> L41Factorizations() {
  auto p = [](const char* text) { return ParseCycles(text, 4); };
  return {{{p("(1,2)(3,4)"), p("(1,3,2,4)"), p("(1,4,2,3)")},
           {p("(1,3)(2,4)"), p("(1,2,3,4)"), p("(1,4,3,2)")},
           {p("(1,4)(2,3)"), p("(1,2,4,3)"), p("(1,3,4,2)")}}};
}

std::vector<Part> BuildType3() {
  // Block row sets touched by the identity and the seven row-swap sets.
  const std::vector<std::vector<int>> variants{{},     {1},    {2},    {3},
                                               {4},    {1, 2}, {1, 3}, {1, 4}};
  std::vector<Part> parts;
  for (const auto& factorization : L41Factorizations()) {
    Part base;
    for (const auto& tau : factorization) {
      std::vector<int> all_i(8), all_r(8);
      for (int row = 1; row <= 8; ++row) {
        const int block = (row - 1) / 2 + 1, a = (row - 1) % 2 + 1;
        all_i[row - 1] = 2 * (tau(block) - 1) + a;
        all_r[row - 1] = 2 * (tau(block) - 1) + (3 - a);
      }
      base.emplace_back(all_i);
      base.emplace_back(all_r);
    }
    for (const auto& flips : variants) {
      Part part;
      for (auto m : base) {
        for (int r : flips) m = SwapRowsInBlockRow(m, r);
        part.push_back(std::move(m));
      }
      std::sort(part.begin(), part.end());
      parts.push_back(std::move(part));
    }
  }
  return parts;
}

L82Construction BuildL82() {
  L82Construction out;
  for (const auto& t : BuildType1()) out.type1.push_back(t.Members());
  out.type2 = BuildType2();
  out.type3 = BuildType3();
  out.certificate = PartitionCertificate{L82(), true, {}};
  for (const auto* group : {&out.type1, &out.type2, &out.type3}) {
    out.certificate.parts.insert(out.certificate.parts.end(), group->begin(),
                                 group->end());
  }
  out.certificate.Canonicalize();
  return out;
}

std::map<L82Class, std::size_t> ClassUsage(const PartitionCertificate& cert) {
  std::map<L82Class, std::size_t> usage;
  for (const auto& part : cert.parts) {
    for (const auto& p : part) ++usage[ClassOfL82(p)];
  }
  return usage;
}

}  // namespace perfpart::l82
