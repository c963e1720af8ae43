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

// Perfect partition of L(8,2) into 792 one-factorizations of six matchings,
// working on the 4 x 4 block view (see BlockView). Classes S0^1, S0 - S0^1,
// S1, S2, S4 are those of ClassOfL82.
//
//   Type I    384 parts: two S0^1 members P, Q plus four S1 members.
//   Type II   384 parts: four S0 - S0^1 members plus two S2 members.
//   Type III   24 parts: six S4 members.
//
// Block positions are written (row, col), 1-based.

#ifndef PERFPART_CONSTRUCT_L82_H_
#define PERFPART_CONSTRUCT_L82_H_

#include <array>
#include <map>
#include <vector>

#include "perfpart/graph.h"
#include "perfpart/matchings.h"
#include "perfpart/permutation.h"
#include "perfpart/verifier.h"

namespace perfpart::l82 {

using Part = std::vector<Permutation>;

// Entry (a,b) moves to (3-a,3-b), (3-a,b) and (a,3-b) respectively, so
// Complement fixes I_2 and R_2 while the flips swap them.
Block2 Complement(Block2 b);
Block2 RowFlip(Block2 b);
Block2 ColFlip(Block2 b);

// Throws std::invalid_argument unless the blocks form a permutation matrix.
Permutation FromBlocks(const BlockMatrix& bm);

// Blockwise complement, and the row swaps R(1,2),R(3,4),R(5,6),R(7,8) /
// column swaps C(1,2),...,C(7,8) applied to a whole matrix.
Permutation ComplementBlocks(const Permutation& p);
Permutation SwapRowsInBlocks(const Permutation& p);
Permutation SwapColsInBlocks(const Permutation& p);
// Row swap R(2r-1, 2r) for one block row r.
Permutation SwapRowsInBlockRow(const Permutation& p, int r);

// Block involution (1,i)(j,k) with j < k marking the zero blocks of S0^1.
struct ZeroPattern {
  int i, j, k;
};
std::array<ZeroPattern, 3> ZeroPatterns();

// Free blocks in the order P_{1j}, P_{ik}, P_{j1}, P_{ki}; each is E_{a,b}.
using FreeBlocks = std::array<Block2, 4>;

struct Type1Part {
  Permutation p, q;        // S0^1, q the blockwise complement of p
  Permutation s, t, u, v;  // S1, invertible at (1,i), (i,1), (j,k), (k,j)
  Part Members() const { return {p, q, s, t, u, v}; }
};

// P is fixed by the zero pattern and the free blocks. L - P - Q splits
// into four S1 members with the stated invertible positions in four ways;
// S, T, U, V is the one where, with P_{k1} = E_{a,b}, T_{1j} has its one in
// row a and V_{j1} has its one in row b. Throws std::logic_error unless
// exactly one decomposition fits.
Type1Part Type1(const ZeroPattern& pattern, const FreeBlocks& free);

// All 3 * 128 parts, free blocks canonicalized to P_{1j} in {E11, E12}.
std::vector<Type1Part> BuildType1();

// Block 4-cycle 1 -> i -> j -> k -> 1; one representative per inverse
// pair, i < k.
struct BlockCycle {
  int i, j, k;
};
std::array<BlockCycle, 3> BlockCycles();

// Chord blocks at (1,j), (j,1), (k,i), (i,k).
using ChordBlocks = std::array<Block2, 4>;

// a[0] = A1 has zero blocks on the cycle, a[1] its blockwise complement,
// a[2] / a[3] the row- / column-swapped a[1]. b[] is the same family
// grown from A1', which has zero blocks on the inverse cycle and shares
// A1's chord blocks.
struct Type2Family {
  std::array<Permutation, 4> a, b;
};
Type2Family Type2Matrices(const BlockCycle& cycle, const ChordBlocks& chords);

// Every unordered set of matchings that completes `members` to a
// factorization of L(8,2), sorted.
std::vector<Part> ResidualDecompositions(const std::vector<Permutation>& members);

// The two four-member groups {A1, A2, A3', A4'} and {A1', A2', A3, A4}.
std::array<Part, 2> Type2Groups(const BlockCycle& cycle,
                                const ChordBlocks& chords);

// Every way to complete `group` with two S2 members. A group has four.
std::vector<Part> S2Completions(const Part& group);

// Both groups, each completed by one S2 pair {B1, B2}. With chord block
// C_{ki} = E_{a,b}, the pair is picked by the member with an invertible
// block at (1,i) or at (i,1):
//   group {A1, A2, A3', A4'}: (1,i) when a = 2, (i,1) when a = 1; its E
//     block at (i,1) or (1,i) respectively sits in row 3-b.
//   group {A1', A2', A3, A4}: (1,i) when a = 1, (i,1) when a = 2; E block
//     in row b.
// Throws std::logic_error unless exactly one completion fits.
std::array<Part, 2> Type2Parts(const BlockCycle& cycle,
                               const ChordBlocks& chords);

// Residual decompositions of the single family {A1, A2, A3, A4}. Every one
// of them is a pair of S4 members, so this grouping cannot be the source of
// the S2 parts; kept as a diagnostic.
std::vector<Part> Type2SingleFamilyResiduals(const BlockCycle& cycle,
                                             const ChordBlocks& chords);

// Every group is produced by four (chord, family) choices.
struct Type2Audit {
  std::size_t raw_groups = 0;       // 3 cycles x 256 chords x 2
  std::size_t distinct_groups = 0;
};
Type2Audit AuditType2Groups();

// One generator per group: chord C_{ik} = E11, the other chords free, so
// 3 x 64 x 2 = 384 parts.
std::vector<Part> BuildType2();

// The three block-level factorizations {(1,2)(3,4), (1,3,2,4), (1,4,2,3)},
// {(1,3)(2,4), (1,2,3,4), (1,4,3,2)}, {(1,4)(2,3), (1,2,4,3), (1,3,4,2)}.
std::array<std::array<Permutation, 3>, 3> L41Factorizations();

// Each block factorization expanded with all-I_2 and all-R_2 blocks, then
// varied by the identity and the seven row-swap sets {R(1,2)}, {R(3,4)},
// {R(5,6)}, {R(7,8)}, {R(1,2),R(3,4)}, {R(1,2),R(5,6)}, {R(1,2),R(7,8)}.
std::vector<Part> BuildType3();

struct L82Construction {
  std::vector<Part> type1, type2, type3;
  PartitionCertificate certificate;
};

L82Construction BuildL82();

// Number of certificate members per class.
std::map<L82Class, std::size_t> ClassUsage(const PartitionCertificate& cert);

}  // namespace perfpart::l82

#endif  // PERFPART_CONSTRUCT_L82_H_
