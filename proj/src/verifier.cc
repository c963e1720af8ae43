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

#include "perfpart/verifier.h"

#include <algorithm>
#include <unordered_map>

#include "perfpart/matchings.h"
#include "perfpart/parallel.h"
#include "perfpart/search.h"

namespace perfpart {

std::string ToString(Violation::Kind kind) {
  using K = Violation::Kind;
  switch (kind) {
    case K::kDegreeMismatch:
      return "degree-mismatch";
    case K::kNotMatching:
      return "not-a-matching";
    case K::kWrongSize:
      return "wrong-size";
    case K::kDoubledEdge:
      return "doubled-edge";
    case K::kUncoveredEdge:
      return "uncovered-edge";
    case K::kIrregularGraph:
      return "irregular-graph";
    case K::kOverlap:
      return "overlap";
    case K::kMissingMatching:
      return "missing-matching";
    case K::kCountMismatch:
      return "count-mismatch";
  }
  return "unknown";
}

std::string Report::Summary() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    out += ToString(v.kind) + ": " + v.message + "\n";
  }
  return out;
}

namespace {

std::string EdgeName(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Edge-coverage check with a caller-owned n*n counter so repeated calls
// reuse one allocation.
Report CheckFactorizationWith(const Graph& graph, int degree,
                              std::span<const Permutation> perms,
                              std::vector<int>& counter) {
  const int n = graph.n();
  Report report;
  auto fail = [&](Violation::Kind kind, std::string message,
                  std::vector<Permutation> members = {}) {
    report.violations.push_back({kind, std::move(message), {},
                                 std::move(members)});
    return report;
  };
  for (const auto& p : perms) {
    if (p.degree() != n) {
      return fail(Violation::Kind::kDegreeMismatch,
                  "member " + ToCycleString(p) + " has degree " +
                      std::to_string(p.degree()),
                  {p});
    }
    if (!graph.IsMatching(p)) {
      return fail(Violation::Kind::kNotMatching,
                  "member " + ToCycleString(p) + " is not a matching", {p});
    }
  }
  if (static_cast<int>(perms.size()) != degree) {
    return fail(Violation::Kind::kWrongSize,
                "part has " + std::to_string(perms.size()) +
                    " members, degree is " + std::to_string(degree));
  }
  std::fill(counter.begin(), counter.end(), 0);
  for (const auto& p : perms) {
    for (int i = 1; i <= n; ++i) {
      int& c = counter[(i - 1) * n + (p(i) - 1)];
      if (++c > 1) {
        return fail(Violation::Kind::kDoubledEdge,
                    "edge " + EdgeName(i, p(i)) + " covered twice, again by " +
                        ToCycleString(p),
                    {p});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (graph.edge(i, j) && counter[(i - 1) * n + (j - 1)] == 0) {
        return fail(Violation::Kind::kUncoveredEdge,
                    "edge " + EdgeName(i, j) + " not covered");
      }
    }
  }
  return report;
}

}  // namespace

Report CheckFactorization(const Graph& graph,
                          std::span<const Permutation> perms) {
  if (!graph.IsRegular()) {
    return Report{{{Violation::Kind::kIrregularGraph,
                    graph.Name() + " is not regular", {}, {}}}};
  }
  std::vector<int> counter(graph.n() * graph.n());
  return CheckFactorizationWith(graph, graph.Degree(), perms, counter);
}

void PartitionCertificate::Canonicalize() {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end());
}

std::size_t PartitionCertificate::MatchingCount() const {
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  return total;
}

Report CheckPartition(const PartitionCertificate& cert) {
  const Graph& graph = cert.graph;
  if (!graph.IsRegular()) {
    return Report{{{Violation::Kind::kIrregularGraph,
                    graph.Name() + " is not regular", {}, {}}}};
  }
  const int degree = graph.Degree();

  // Per-part checks, each chunk tallying into its own report.
  std::vector<Report> chunk_reports(ChunkCount(cert.parts.size()));
  ParallelChunks(cert.parts.size(), [&](int c, std::uint64_t b,
                                        std::uint64_t e) {
    std::vector<int> counter(graph.n() * graph.n());
    for (std::uint64_t k = b; k < e; ++k) {
      Report r = CheckFactorizationWith(graph, degree, cert.parts[k], counter);
      for (auto& v : r.violations) {
        v.parts = {static_cast<std::size_t>(k)};
        v.message = "part " + std::to_string(k) + ": " + v.message;
        chunk_reports[c].violations.push_back(std::move(v));
      }
    }
  });
  Report report;
  for (auto& r : chunk_reports) {
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
  }

  std::unordered_map<Permutation, std::size_t> owner;
  owner.reserve(cert.MatchingCount());
  for (std::size_t k = 0; k < cert.parts.size(); ++k) {
    for (const auto& p : cert.parts[k]) {
      auto [it, inserted] = owner.emplace(p, k);
      if (!inserted) {
        report.violations.push_back(
            {Violation::Kind::kOverlap,
             ToCycleString(p) + " appears in parts " +
                 std::to_string(it->second) + " and " + std::to_string(k),
             {it->second, k},
             {p}});
      }
    }
  }

  if (cert.complete) {
    if (graph.n() > kEnumerateMaxN) {
      report.violations.push_back(
          {Violation::Kind::kMissingMatching,
           "cannot enumerate matchings of " + graph.Name() +
               " to confirm completeness",
           {},
           {}});
      return report;
    }
    const MatchingSet all = Enumerate(graph);
    std::size_t missing = 0;
    for (const auto& p : all.perms()) {
      if (owner.contains(p)) continue;
      if (++missing <= 10) {
        report.violations.push_back({Violation::Kind::kMissingMatching,
                                     ToCycleString(p) + " is in no part",
                                     {},
                                     {p}});
      }
    }
    if (missing > 10) {
      report.violations.push_back(
          {Violation::Kind::kMissingMatching,
           std::to_string(missing) + " matchings missing in total", {}, {}});
    }
    if (static_cast<std::size_t>(degree) * cert.parts.size() != all.size()) {
      report.violations.push_back(
          {Violation::Kind::kCountMismatch,
           std::to_string(cert.parts.size()) + " parts of " +
               std::to_string(degree) + " cannot cover " +
               std::to_string(all.size()) + " matchings",
           {},
           {}});
    }
  }
  return report;
}

ExtendabilityResult CheckExtendability(const Graph& graph) {
  graph.Degree();  // throws for irregular graphs
  FactorizationFinder finder(graph);
  ExtendabilityResult result;
  for (const auto& p : finder.matchings().perms()) {
    ++result.checked;
    if (!finder.First(p)) {
      result.ok = false;
      result.counterexample = p;
      return result;
    }
  }
  return result;
}

}  // namespace perfpart
