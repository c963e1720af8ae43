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

#include "perfpart/construct_l61.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

#include "perfpart/graph.h"
#include "perfpart/matchings.h"

namespace perfpart::l61 {
namespace {

constexpr int kN = 6;

Permutation FromCycles(std::initializer_list<std::vector<int>> cycles) {
  std::vector<int> images(kN);
  for (int i = 0; i < kN; ++i) images[i] = i + 1;
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(images);
}

// Points of {2..6} outside `exclude`, ascending.
std::vector<int> Others(std::initializer_list<int> exclude) {
  std::vector<int> out;
  for (int p = 2; p <= kN; ++p) {
    if (std::find(exclude.begin(), exclude.end(), p) == exclude.end()) {
      out.push_back(p);
    }
  }
  return out;
}

bool Is33(const Permutation& p) {
  return p.degree() == kN && CycleTypeOf(p) == CycleType{3, 3};
}

void Require33(const Permutation& p) {
  if (!Is33(p)) {
    throw std::invalid_argument(ToCycleString(p) +
                                " is not a product of two 3-cycles on 6 points");
  }
}

// (1 p q r) word of a 2+4 element whose 4-cycle contains 1.
std::array<int, 3> Word(const Permutation& e) {
  return {e(1), e(e(1)), e(e(e(1)))};
}

bool IsRotation(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  for (int s = 0; s < 3; ++s) {
    if (a[0] == b[s] && a[1] == b[(s + 1) % 3] && a[2] == b[(s + 2) % 3]) {
      return true;
    }
  }
  return false;
}

void RequireValidPattern(const Permutation& rep, const Permutation& pattern) {
  Require33(pattern);
  if (pattern(1) != rep(1) || pattern(rep(1)) != rep(rep(1))) {
    throw std::invalid_argument("pattern " + ToCycleString(pattern) +
                                " does not share the 1-cycle of " +
                                ToCycleString(rep));
  }
}

// Edge mask of a derangement of 6, edge (i, j) at bit 6(i-1) + (j-1).
std::uint64_t EdgeMask(const Permutation& p) {
  std::uint64_t mask = 0;
  for (int i = 1; i <= kN; ++i) {
    mask |= std::uint64_t{1} << (kN * (i - 1) + p(i) - 1);
  }
  return mask;
}

std::uint64_t L61Edges() {
  std::uint64_t all = 0;
  for (int i = 1; i <= kN; ++i) {
    for (int j = 1; j <= kN; ++j) {
      if (i != j) all |= std::uint64_t{1} << (kN * (i - 1) + j - 1);
    }
  }
  return all;
}

// The three (1 y0)(..)(..) derangements, ascending.
std::vector<Permutation> Involutions1Y0(int y0) {
  const auto rest = Others({y0});
  std::vector<Permutation> out;
  for (int partner : {rest[1], rest[2], rest[3]}) {
    std::vector<int> other;
    for (int p : rest) {
      if (p != rest[0] && p != partner) other.push_back(p);
    }
    out.push_back(
        FromCycles({{1, y0}, {rest[0], partner}, {other[0], other[1]}}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Part T1Subset(const Permutation& sigma, int rotation) {
  if (sigma.degree() != kN || CycleTypeOf(sigma) != CycleType{2, 4} ||
      sigma(sigma(1)) != 1) {
    throw std::invalid_argument(ToCycleString(sigma) +
                                " is not a (1 x)(....) derangement");
  }
  const int x2 = sigma(1);
  int x3 = Others({x2})[0];
  for (int r = 0; r < ((rotation % 4) + 4) % 4; ++r) x3 = sigma(x3);
  const int x4 = sigma(x3), x5 = sigma(x4), x6 = sigma(x5);
  return {sigma,
          FromCycles({{1, x3, x2, x5, x4, x6}}),
          FromCycles({{1, x4, x2, x6, x5, x3}}),
          FromCycles({{1, x5, x2, x3, x6, x4}}),
          FromCycles({{1, x6, x2, x4, x3, x5}})};
}

std::vector<Part> BuildT1() {
  const auto classes = ClassifyL61(Enumerate(Graph::L(1, kN)));
  std::vector<Part> parts;
  for (const auto& sigma : classes.c24_0) parts.push_back(T1Subset(sigma));
  return parts;
}

int ClassOf(const Permutation& sigma) {
  Require33(sigma);
  const int x = sigma(1), y = sigma(x);
  const int a = Others({x, y})[0];
  const int b = sigma(a), c = sigma(b);
  return b < c ? y : x;
}

Permutation CanonicalRep(const Permutation& sigma) {
  Require33(sigma);
  const int x = sigma(1), y = sigma(x);
  const int a = Others({x, y})[0];
  return sigma(a) < sigma(sigma(a)) ? sigma : Inverse(sigma);
}

std::array<Permutation, 3> PatternApply(const Permutation& pattern) {
  Require33(pattern);
  const int x = pattern(1), y = pattern(x);
  const int w = Others({x, y})[0];
  const int v = pattern(w), u = pattern(v);
  return {FromCycles({{1, w, x, v}, {y, u}}),
          FromCycles({{1, v, x, u}, {y, w}}),
          FromCycles({{1, u, x, w}, {y, v}})};
}

std::array<Permutation, 2> PatternsFor(const Permutation& sigma) {
  const Permutation rep = CanonicalRep(sigma);
  const int x = rep(1), y = rep(x);
  const auto abc = Others({x, y});
  return {FromCycles({{1, x, y}, {abc[0], abc[1], abc[2]}}),
          FromCycles({{1, x, y}, {abc[0], abc[2], abc[1]}})};
}

Part ZoneSubset::Members() const {
  return {rep, Inverse(rep), attached[0], attached[1], attached[2]};
}

std::vector<Part> Zone::CanonicalParts() const {
  std::vector<Part> parts;
  for (const auto& s : subsets) {
    Part p = s.Members();
    std::sort(p.begin(), p.end());
    parts.push_back(std::move(p));
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

Zone PropagateZone(const Permutation& seed, const Permutation& pattern) {
  const Permutation rep = CanonicalRep(seed);
  RequireValidPattern(rep, pattern);
  const int x = rep(1), y = rep(x);

  Zone zone;
  zone.y = y;
  const auto attached = PatternApply(pattern);
  zone.subsets.push_back({rep, pattern, attached});

  for (int v : Others({x, y})) {
    // (1 u x v)(y k): v right after x.
    const auto e1 = std::find_if(attached.begin(), attached.end(),
                                 [&](const Permutation& e) { return e(x) == v; });
    // (1 v x k)(y u): v right after 1.
    const auto e2 = std::find_if(attached.begin(), attached.end(),
                                 [&](const Permutation& e) { return e(1) == v; });
    if (e1 == attached.end() || e2 == attached.end()) {
      throw std::logic_error("zone propagation: no attached element places " +
                             std::to_string(v) + " next to " +
                             std::to_string(x));
    }
    const int u = (*e1)(1), k = (*e1)(y);
    if ((*e2)(v) != x || (*e2)(x) != k || (*e2)(y) != u) {
      throw std::logic_error("zone propagation inconsistent at " +
                             ToCycleString(*e1) + " / " + ToCycleString(*e2));
    }
    const auto rest = Others({v, y});
    const Permutation gamma = FromCycles({{1, v, y}, {rest[0], rest[1], rest[2]}});
    const Permutation gamma_pattern = FromCycles({{1, v, y}, {x, u, k}});
    RequireValidPattern(gamma, gamma_pattern);
    zone.subsets.push_back({gamma, gamma_pattern, PatternApply(gamma_pattern)});
  }
  std::sort(zone.subsets.begin(), zone.subsets.end(),
            [](const ZoneSubset& a, const ZoneSubset& b) {
              return a.rep(1) < b.rep(1);
            });

  // Subsets sharing a 2-cycle (y k) must carry rotated, unequal words.
  for (std::size_t s = 0; s < zone.subsets.size(); ++s) {
    for (std::size_t t = s + 1; t < zone.subsets.size(); ++t) {
      for (const auto& e : zone.subsets[s].attached) {
        for (const auto& f : zone.subsets[t].attached) {
          if (e(y) != f(y)) continue;
          if (e == f || !IsRotation(Word(e), Word(f))) {
            throw std::logic_error("zone " + std::to_string(y) + ": " +
                                   ToCycleString(e) + " and " +
                                   ToCycleString(f) +
                                   " violate the shared 2-cycle rule");
          }
        }
      }
    }
  }
  return zone;
}

std::map<int, Zone> LinkedZones(const Permutation& seed,
                                const Permutation& pattern) {
  std::map<int, Zone> zones;
  Zone first = PropagateZone(seed, pattern);
  const int y0 = first.y;
  zones.emplace(y0, std::move(first));

  // Breadth-first over links; a zone reached twice must agree.
  std::deque<int> queue{y0};
  std::set<int> expanded;
  while (!queue.empty()) {
    const int y = queue.front();
    queue.pop_front();
    if (!expanded.insert(y).second) continue;
    for (const auto& s : zones.at(y).subsets) {
      const int x = s.rep(1);
      const auto abc = Others({x, y});
      const Permutation star = FromCycles({{1, y, x}, {abc[0], abc[1], abc[2]}});
      Zone linked = PropagateZone(star, Inverse(s.pattern));
      auto it = zones.find(x);
      if (it == zones.end()) {
        zones.emplace(x, std::move(linked));
        queue.push_back(x);
      } else if (it->second.CanonicalParts() != linked.CanonicalParts()) {
        throw std::logic_error("zone " + std::to_string(x) +
                               " reached inconsistently from zone " +
                               std::to_string(y));
      }
      if (!expanded.contains(x)) queue.push_back(x);
    }
  }
  if (zones.size() != 5) throw std::logic_error("expected five zones");

  std::set<Permutation> seen;
  for (const auto& [y, zone] : zones) {
    for (const auto& s : zone.subsets) {
      for (const auto& p : s.Members()) {
        if (!seen.insert(p).second) {
          throw std::logic_error("zones overlap at " + ToCycleString(p));
        }
      }
    }
  }
  return zones;
}

std::vector<Part> BuildT4(const Zone& zone_y0) {
  const int y0 = zone_y0.y;
  std::vector<Part> parts;
  for (const auto& s : zone_y0.subsets) {
    const int x = s.rep(1);
    const int a = Others({x, y0})[0];
    const int b = s.pattern(a), c = s.pattern(b);
    parts.push_back({s.rep, Inverse(s.rep),
                     FromCycles({{1, a}, {x, b}, {y0, c}}),
                     FromCycles({{1, b}, {x, c}, {y0, a}}),
                     FromCycles({{1, c}, {x, a}, {y0, b}})});
  }
  return parts;
}

std::vector<Part> BuildT3(const Zone& zone_y0) {
  std::vector<Permutation> pool;
  for (const auto& s : zone_y0.subsets) {
    pool.insert(pool.end(), s.attached.begin(), s.attached.end());
  }
  std::sort(pool.begin(), pool.end());
  if (pool.size() != 12) throw std::logic_error("zone must attach 12 elements");

  std::vector<std::uint64_t> masks;
  for (const auto& p : pool) masks.push_back(EdgeMask(p));
  const std::uint64_t all_edges = L61Edges();
  const auto mus = Involutions1Y0(zone_y0.y);

  // Four-element groups (as 12-bit index masks) completing each mu.
  std::vector<std::vector<unsigned>> options(mus.size());
  for (std::size_t m = 0; m < mus.size(); ++m) {
    const std::uint64_t mu_mask = EdgeMask(mus[m]);
    for (unsigned pick = 0; pick < (1U << 12); ++pick) {
      if (std::popcount(pick) != 4) continue;
      std::uint64_t covered = mu_mask;
      bool disjoint = true;
      for (unsigned bits = pick; bits && disjoint; bits &= bits - 1) {
        const std::uint64_t e = masks[std::countr_zero(bits)];
        disjoint = (covered & e) == 0;
        covered |= e;
      }
      if (disjoint && covered == all_edges) options[m].push_back(pick);
    }
  }

  std::vector<std::array<unsigned, 3>> solutions;
  for (unsigned a : options[0]) {
    for (unsigned b : options[1]) {
      if (a & b) continue;
      for (unsigned c : options[2]) {
        if ((a | b) & c) continue;
        if ((a | b | c) == (1U << 12) - 1) solutions.push_back({a, b, c});
      }
    }
  }
  if (solutions.size() != 1) {
    throw std::logic_error("T3 assembly for zone " +
                           std::to_string(zone_y0.y) + " has " +
                           std::to_string(solutions.size()) +
                           " solutions, expected exactly one");
  }
  std::vector<Part> parts;
  for (std::size_t m = 0; m < mus.size(); ++m) {
    Part part{mus[m]};
    for (unsigned bits = solutions[0][m]; bits; bits &= bits - 1) {
      part.push_back(pool[std::countr_zero(bits)]);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<Part> BuildT3Formula(const Zone& zone_y0, int x_choice) {
  const int y0 = zone_y0.y;
  std::vector<Part> parts;
  for (const auto& mu : Involutions1Y0(y0)) {
    const int x = Others({y0})[((x_choice % 4) + 4) % 4];
    const auto subset =
        std::find_if(zone_y0.subsets.begin(), zone_y0.subsets.end(),
                     [&](const ZoneSubset& s) { return s.rep(1) == x; });
    if (subset == zone_y0.subsets.end()) {
      throw std::logic_error("zone has no subset with middle point " +
                             std::to_string(x));
    }
    const Permutation& pattern = subset->pattern;
    const int a1 = mu(x);
    const auto pair = Others({y0, x, a1});
    // Orient (b' a' c') along the pattern cycle.
    const int b1 = pattern(pair[0]) == a1 ? pair[0] : pair[1];
    const int c1 = b1 == pair[0] ? pair[1] : pair[0];
    if (pattern(b1) != a1 || pattern(a1) != c1) {
      throw std::logic_error("pattern cycle does not pass through " +
                             std::to_string(a1));
    }
    parts.push_back({mu, FromCycles({{1, b1, a1, c1}, {y0, x}}),
                     FromCycles({{1, c1, x, b1}, {y0, a1}}),
                     FromCycles({{1, x, c1, a1}, {y0, b1}}),
                     FromCycles({{1, a1, b1, x}, {y0, c1}})});
  }
  return parts;
}

L61Construction BuildL61(const L61Options& options) {
  if (options.y0 < 2 || options.y0 > kN) {
    throw std::invalid_argument("y0 must be in 2..6");
  }
  const Permutation seed = ParseCycles(options.seed, kN);
  const Permutation pattern = ParseCycles(options.pattern, kN);

  L61Construction out;
  out.zones = LinkedZones(seed, pattern);
  out.t1 = BuildT1();
  for (const auto& [y, zone] : out.zones) {
    if (y == options.y0) continue;
    for (const auto& s : zone.subsets) out.t2.push_back(s.Members());
  }
  const Zone& withheld = out.zones.at(options.y0);
  out.t3 = BuildT3(withheld);
  out.t4 = BuildT4(withheld);

  out.certificate = PartitionCertificate{Graph::L(1, kN), true, {}};
  for (const auto* group : {&out.t1, &out.t2, &out.t3, &out.t4}) {
    out.certificate.parts.insert(out.certificate.parts.end(), group->begin(),
                                 group->end());
  }
  out.certificate.Canonicalize();
  return out;
}

std::vector<L61Choice> AllL61Choices() {
  const auto classes = ClassifyL61(Enumerate(Graph::L(1, kN)));
  std::set<Permutation> reps;
  for (const auto& p : classes.c33) reps.insert(CanonicalRep(p));
  std::vector<L61Choice> out;
  for (int y0 = 2; y0 <= kN; ++y0) {
    for (const auto& rep : reps) {
      for (const auto& pattern : PatternsFor(rep)) {
        out.push_back({y0, rep, pattern});
      }
    }
  }
  return out;
}

}  // namespace perfpart::l61
