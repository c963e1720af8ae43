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

// Perfect partition of L(6,1), the derangements of six points, into 53
// one-factorizations of five derangements each:
//
//   T1  30 parts: one (1 x)(....) element and four 6-cycles.
//   T2  16 parts: a 3+3 inverse pair and three 2+4 elements, grouped into
//       "zones" by class.
//   T3   3 parts: one (1 y0)(..)(..) element and four 2+4 elements taken
//       from the withheld zone y0.
//   T4   4 parts: a class-y0 3+3 inverse pair and three 2+2+2 elements.
//
// Vocabulary. A 3+3 derangement sigma = (1 x y)(a b c) with a < b, c has
// class y when b < c and class x otherwise; sigma and its inverse share a
// class, and the one with a < b < c is the canonical representative. A
// pattern for a canonical class-y representative is a permutation
// (1 x y)(w v u) with {w, v, u} = {a, b, c}; it attaches the three 2+4
// elements (1 w x v)(y u), (1 v x u)(y w), (1 u x w)(y v). Only the cyclic
// order of (w v u) matters, so a pattern is one of two permutations.

#ifndef PERFPART_CONSTRUCT_L61_H_
#define PERFPART_CONSTRUCT_L61_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "perfpart/permutation.h"
#include "perfpart/verifier.h"

namespace perfpart::l61 {

using Part = std::vector<Permutation>;

// Five-element T1 part of a (1 x2)(x3 x4 x5 x6) element: the element plus
// (1 x3 x2 x5 x4 x6), (1 x4 x2 x6 x5 x3), (1 x5 x2 x3 x6 x4),
// (1 x6 x2 x4 x3 x5). Throws std::invalid_argument if `sigma` is not a
// 2+4 derangement with 1 in the 2-cycle. `rotation` (0..3) picks which
// point of the 4-cycle is read as x3; the result does not depend on it.
Part T1Subset(const Permutation& sigma, int rotation = 0);
std::vector<Part> BuildT1();

// Throw std::invalid_argument unless `sigma` is a 3+3 derangement of 6.
int ClassOf(const Permutation& sigma);
Permutation CanonicalRep(const Permutation& sigma);

// The three 2+4 elements attached by `pattern`.
std::array<Permutation, 3> PatternApply(const Permutation& pattern);

// The two patterns valid for the canonical representative of `sigma`.
std::array<Permutation, 2> PatternsFor(const Permutation& sigma);

struct ZoneSubset {
  Permutation rep;       // canonical representative
  Permutation pattern;   // shares its 1-cycle with rep
  std::array<Permutation, 3> attached;

  // rep, rep^-1, then the attached elements.
  Part Members() const;
};

struct Zone {
  int y = 0;
  // Ordered by the middle point x of the representative (1 x y)(a b c).
  std::vector<ZoneSubset> subsets;

  // Subsets as sorted member lists, sorted; comparable across seeds.
  std::vector<Part> CanonicalParts() const;
};

// Zone of the seed's class. Every other class-y pair gets its pattern from
// the seed: for each v in {a, b, c}, the seed's attached elements
// (1 u x v)(y k) and (1 v x k)(y u) give the pair (1 v y)(...) the pattern
// (1 v y)(x u k). Checks afterwards that any two subsets sharing a 2-cycle
// (y k) carry 4-cycles (1 p q r) whose words (p q r) are distinct cyclic
// rotations of each other; a failure throws std::logic_error.
//
// `seed` may be either member of its inverse pair; `pattern` must be valid
// for its canonical representative (std::invalid_argument otherwise).
Zone PropagateZone(const Permutation& seed, const Permutation& pattern);

// All five zones, keyed by class. The representative (1 z y)(a b c) of
// zone y with pattern P seeds zone z as (1 y z)(a b c) with pattern P^-1.
// Checks that every zone is reached consistently from every other zone and
// that the zones are pairwise disjoint (std::logic_error otherwise).
std::map<int, Zone> LinkedZones(const Permutation& seed,
                                const Permutation& pattern);

// For each class-y0 subset (1 x y0)(...) with pattern (1 x y0)(a b c):
// {rep, rep^-1, (1 a)(x b)(y0 c), (1 b)(x c)(y0 a), (1 c)(x a)(y0 b)}.
std::vector<Part> BuildT4(const Zone& zone_y0);

// Partitions the twelve 2+4 elements of zone y0 into three groups of four,
// each completed to a factorization by one of the three 2+2+2 elements
// containing (1 y0). Solved as a small exact cover; throws
// std::logic_error unless exactly one solution exists.
std::vector<Part> BuildT3(const Zone& zone_y0);

// The same parts from the closed form: for mu = (1 y0)(x a')(b' c'),
// {mu, (1 b' a' c')(y0 x), (1 c' x b')(y0 a'), (1 x c' a')(y0 b'),
//  (1 a' b' x)(y0 c')} where the cycle (b' a' c') equals the pattern cycle
// of the zone subset whose middle point is x. `x_choice` (0..3) selects
// which point of mu other than 1, y0 is read as x.
std::vector<Part> BuildT3Formula(const Zone& zone_y0, int x_choice = 0);

struct L61Options {
  int y0 = 5;
  std::string seed = "(1 3 2)(4 5 6)";
  std::string pattern = "(1 3 2)(4 6 5)";
};

struct L61Construction {
  std::vector<Part> t1, t2, t3, t4;
  std::map<int, Zone> zones;
  PartitionCertificate certificate;
};

L61Construction BuildL61(const L61Options& options = {});

// Every (y0, seed, pattern) choice: y0 in 2..6, seeds over all twenty
// canonical representatives, both patterns each.
struct L61Choice {
  int y0;
  Permutation seed;
  Permutation pattern;
};
std::vector<L61Choice> AllL61Choices();

}  // namespace perfpart::l61

#endif  // PERFPART_CONSTRUCT_L61_H_
