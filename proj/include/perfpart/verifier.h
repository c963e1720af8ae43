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

#ifndef PERFPART_VERIFIER_H_
#define PERFPART_VERIFIER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perfpart/graph.h"
#include "perfpart/permutation.h"

namespace perfpart {

// One problem found by a check. `parts` holds 0-based part indices and
// `members` the offending matchings, when applicable.
struct Violation {
  enum class Kind {
    kDegreeMismatch,   // member of the wrong degree
    kNotMatching,      // member uses a non-edge
    kWrongSize,        // part size differs from the graph degree
    kDoubledEdge,      // an edge covered twice within a part
    kUncoveredEdge,    // an edge missed by a part
    kIrregularGraph,
    kOverlap,          // a matching in two parts
    kMissingMatching,  // complete certificate misses a matching
    kCountMismatch,    // degree * parts != number of matchings
  };
  Kind kind;
  std::string message;
  std::vector<std::size_t> parts;
  std::vector<Permutation> members;
};

std::string ToString(Violation::Kind kind);

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  // "ok" or one line per violation.
  std::string Summary() const;
};

// A factorization of `graph` is `degree` matchings whose permutation
// matrices sum to the adjacency matrix. Stops at the first violation.
Report CheckFactorization(const Graph& graph,
                          std::span<const Permutation> perms);

// A claimed partition of the matchings of `graph` into factorizations.
// `complete` claims the parts cover every matching.
struct PartitionCertificate {
  Graph graph = Graph::Complete(1);
  bool complete = true;
  std::vector<std::vector<Permutation>> parts;

  // Sorts members within each part, then the parts themselves.
  void Canonicalize();
  std::size_t MatchingCount() const;
};

// Verifies every part (in parallel), pairwise disjointness and, when
// `complete`, exact coverage of the enumerated matching set.
Report CheckPartition(const PartitionCertificate& cert);

struct ExtendabilityResult {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<Permutation> counterexample;
};

// For every matching, asks the exact-cover search for one factorization
// containing it. Throws std::length_error for n > 8 and
// std::domain_error for irregular graphs.
ExtendabilityResult CheckExtendability(const Graph& graph);

}  // namespace perfpart

#endif  // PERFPART_VERIFIER_H_
