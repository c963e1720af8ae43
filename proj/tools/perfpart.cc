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

// perfpart: count, enumerate, construct, verify and search perfect
// partitions of L(r, m) and of explicit 0/1 matrices.
//
// Exit codes: 0 success, 1 failed verification or a proven NONE where a
// partition was expected, 2 usage error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "perfpart/certificate_io.h"
#include "perfpart/construct_group.h"
#include "perfpart/construct_l61.h"
#include "perfpart/construct_l82.h"
#include "perfpart/counting.h"
#include "perfpart/golden.h"
#include "perfpart/graph.h"
#include "perfpart/matchings.h"
#include "perfpart/search.h"
#include "perfpart/verifier.h"

namespace {

using nlohmann::json;
using namespace perfpart;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph selection shared by count, enumerate and check.
struct GraphArgs {
  std::optional<int> r, m, n;
  std::string matrix;

  void Add(CLI::App* cmd) {
    cmd->add_option("--r", r, "block size r of L(r,m)");
    cmd->add_option("--m", m, "number of blocks m of L(r,m)");
    cmd->add_option("--n", n, "K(n,n), the complete bipartite graph");
    cmd->add_option("--matrix", matrix, "file with n lines of '0'/'1'");
  }

  Graph Get() const {
    const int given = (r || m) + n.has_value() + !matrix.empty();
    if (given != 1) {
      throw UsageError("give exactly one of --r/--m, --n or --matrix");
    }
    if (!matrix.empty()) return Graph::FromText(ReadFile(matrix));
    if (n) return Graph::Complete(*n);
    if (!r || !m) throw UsageError("--r and --m go together");
    if (*r == 0) return Graph::Complete(*m);
    return Graph::L(*r, *m);
  }
};

json BigJson(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) {
    return json(v.convert_to<std::uint64_t>());
  }
  return json(ToString(v));
}

void PrintJson(const json& j) { std::cout << j.dump(2) << "\n"; }

json ReportJson(const Report& report) {
  json v = json::array();
  for (const auto& violation : report.violations) {
    v.push_back({{"kind", ToString(violation.kind)},
                 {"message", violation.message}});
  }
  return {{"ok", report.ok()}, {"violations", v}};
}

// ---- count ----

struct CountArgs {
  GraphArgs graph;
  bool oracle = false;
  bool as_json = false;
};

int RunCount(const CountArgs& a) {
  const Graph g = a.graph.Get();
  const CountReport report = NecessaryCondition(g, a.oracle);
  json j{{"graph", g.Name()}, {"n", report.n}, {"degree", report.degree},
         {"divisible", report.divisible}};
  if (report.rook_count) j["rook_count"] = BigJson(*report.rook_count);
  if (report.oracle_count) j["oracle_count"] = BigJson(*report.oracle_count);
  if (auto parts = report.parts()) j["parts"] = BigJson(*parts);
  const bool agree = !report.rook_count || !report.oracle_count ||
                     *report.rook_count == *report.oracle_count;
  if (!agree) j["mismatch"] = true;
  if (a.as_json) {
    PrintJson(j);
  } else {
    std::cout << g.Name() << ": " << ToString(report.count())
              << " perfect matchings, degree " << report.degree << "\n";
    if (report.rook_count) {
      std::cout << "  rook formula  " << ToString(*report.rook_count) << "\n";
    }
    if (report.oracle_count) {
      std::cout << "  permanent     " << ToString(*report.oracle_count) << "\n";
    }
    if (report.divisible) {
      std::cout << "  " << report.degree << " | count, "
                << ToString(*report.parts()) << " parts\n";
    } else {
      std::cout << "  " << report.degree
                << " does not divide the count: no perfect partition\n";
    }
  }
  return agree ? kOk : kFailed;
}

// ---- enumerate ----

struct EnumerateArgs {
  GraphArgs graph;
  bool classify = false;
  bool as_json = false;
};

std::string CycleTypeTag(const Permutation& p) {
  std::string tag;
  for (int len : CycleTypeOf(p)) {
    if (!tag.empty()) tag += "+";
    tag += std::to_string(len);
  }
  return tag;
}

std::string L61Tag(const Permutation& p) {
  const auto type = CycleTypeOf(p);
  if (type == std::vector<int>{6}) return "C6";
  if (type == std::vector<int>{3, 3}) return "C33";
  if (type == std::vector<int>{2, 2, 2}) return "C222";
  return p(p(1)) == 1 ? "C24_0" : "C24";
}

int RunEnumerate(const EnumerateArgs& a) {
  const Graph g = a.graph.Get();
  const MatchingSet ms = Enumerate(g);
  const auto params = g.l_params();
  const bool l61 = params && params->r == 1 && params->m == 6;
  const bool l82 = params && params->r == 2 && params->m == 4;
  auto tag = [&](const Permutation& p) {
    if (l61) return L61Tag(p);
    if (l82) return ToString(ClassOfL82(p));
    return CycleTypeTag(p);
  };
  if (a.as_json) {
    json out = json::array();
    for (const auto& p : ms.perms()) {
      if (a.classify) {
        out.push_back({{"cycles", ToCycleString(p)}, {"class", tag(p)}});
      } else {
        out.push_back(ToCycleString(p));
      }
    }
    PrintJson(out);
  } else {
    for (const auto& p : ms.perms()) {
      std::cout << ToCycleString(p);
      if (a.classify) std::cout << "\t" << tag(p);
      std::cout << "\n";
    }
  }
  return kOk;
}

// ---- construct ----

struct ConstructArgs {
  std::string target;
  std::string out;
  std::optional<int> y0;
  std::string seed, pattern;
  bool golden = false;
  bool audit = false;
  bool as_json = false;
};

// Golden comparison for the L(6,1) tables; returns the mismatch count.
std::size_t GoldenDiffL61(const l61::L61Construction& c, json& summary) {
  std::vector<std::pair<std::string, std::vector<golden::Part>>> built{
      {"t1", c.t1}, {"t3", c.t3}, {"t4", c.t4}};
  for (int y = 2; y <= 6; ++y) {
    if (c.zones.contains(y)) {
      built.emplace_back("zone" + std::to_string(y),
                         c.zones.at(y).CanonicalParts());
    }
  }
  std::size_t mismatches = 0;
  for (const auto& [name, parts] : built) {
    const golden::Table table = golden::Load(name);
    const golden::Diff diff = golden::Compare(parts, table.Parts());
    const std::size_t n = diff.missing.size() + diff.unexpected.size();
    mismatches += n;
    summary["golden"][name] = {{"mismatches", n},
                               {"errata", table.errata.size()}};
    if (n) std::cerr << "golden " << name << ":\n" << diff.ToString();
  }
  return mismatches;
}

int RunConstruct(const ConstructArgs& a) {
  PartitionCertificate cert;
  json summary{{"target", a.target}};
  std::size_t golden_mismatches = 0;
  const bool l61 = a.target == "l61";
  if (!l61 && (a.y0 || !a.seed.empty() || !a.pattern.empty())) {
    throw UsageError("--y0, --seed and --pattern apply to --target l61");
  }
  if (a.golden && !l61) throw UsageError("--golden applies to --target l61");
  if (a.audit && a.target != "l82") {
    throw UsageError("--audit applies to --target l82");
  }
  if (l61) {
    l61::L61Options options;
    if (a.y0) options.y0 = *a.y0;
    if (!a.seed.empty()) options.seed = a.seed;
    if (!a.pattern.empty()) options.pattern = a.pattern;
    const auto c = l61::BuildL61(options);
    cert = c.certificate;
    summary["t1"] = c.t1.size();
    summary["t2"] = c.t2.size();
    summary["t3"] = c.t3.size();
    summary["t4"] = c.t4.size();
    if (a.golden) golden_mismatches = GoldenDiffL61(c, summary);
  } else if (a.target == "l82") {
    const auto c = l82::BuildL82();
    cert = c.certificate;
    summary["type1"] = c.type1.size();
    summary["type2"] = c.type2.size();
    summary["type3"] = c.type3.size();
    if (a.audit) {
      for (const auto& [cls, count] : l82::ClassUsage(cert)) {
        summary["class_usage"][ToString(cls)] = count;
      }
      const auto audit = l82::AuditType2Groups();
      summary["type2_groups"] = {{"raw", audit.raw_groups},
                                 {"distinct", audit.distinct_groups}};
      const auto single = l82::Type2SingleFamilyResiduals(
          l82::BlockCycles()[0],
          {EBlock(1, 1), EBlock(1, 1), EBlock(1, 1), EBlock(1, 1)});
      json classes = json::array();
      for (const auto& pair : single) {
        json row = json::array();
        for (const auto& p : pair) row.push_back(ToString(ClassOfL82(p)));
        classes.push_back(row);
      }
      summary["single_family_residual"] = classes;
    }
  } else if (a.target.rfind("knn:", 0) == 0) {
    cert = KnnPartition(std::stoi(a.target.substr(4)));
  } else if (a.target.rfind("l2nn:", 0) == 0) {
    cert = L2nnPartition(std::stoi(a.target.substr(5)));
  } else {
    throw UsageError("unknown target \"" + a.target +
                     "\" (l61, l82, knn:N, l2nn:N)");
  }
  const Report report = CheckPartition(cert);
  const std::string out =
      a.out.empty() ? a.target.substr(0, a.target.find(':')) + ".json" : a.out;
  WriteCertificate(out, cert);
  summary["parts"] = cert.parts.size();
  summary["certificate"] = out;
  summary["verify"] = ReportJson(report);
  if (a.as_json) {
    PrintJson(summary);
  } else {
    std::cout << a.target << ": " << cert.parts.size() << " parts written to "
              << out << "\n";
    if (summary.contains("class_usage")) {
      for (const auto& [cls, count] : summary["class_usage"].items()) {
        std::cout << "  " << cls << " " << count.get<int>() << "\n";
      }
      std::cout << "  type II groups " << summary["type2_groups"]["raw"]
                << " raw, " << summary["type2_groups"]["distinct"]
                << " distinct\n";
      std::cout << "  single-family residual splits:";
      for (const auto& row : summary["single_family_residual"]) {
        std::cout << " " << row[0].get<std::string>() << "+"
                  << row[1].get<std::string>();
      }
      std::cout << "\n";
    }
    if (a.golden) {
      std::cout << "  golden mismatches " << golden_mismatches << "\n";
    }
    std::cout << "  verify " << report.Summary() << "\n";
  }
  return report.ok() && golden_mismatches == 0 ? kOk : kFailed;
}

// ---- verify ----

int RunVerify(const std::string& path, bool as_json) {
  PartitionCertificate cert;
  try {
    cert = ReadCertificate(path);
  } catch (const std::invalid_argument& e) {
    // An unreadable certificate is a failed verification, not bad usage.
    std::cerr << path << ": " << e.what() << "\n";
    return kFailed;
  }
  const Report report = CheckPartition(cert);
  if (as_json) {
    json j = ReportJson(report);
    j["graph"] = cert.graph.Name();
    j["parts"] = cert.parts.size();
    j["complete"] = cert.complete;
    PrintJson(j);
  } else {
    std::cout << path << ": " << cert.graph.Name() << ", "
              << cert.parts.size() << " parts: " << report.Summary() << "\n";
  }
  return report.ok() ? kOk : kFailed;
}

// ---- search ----

struct SearchArgs {
  std::string target;
  std::string matrix;
  std::string out;
  bool all = false;
  std::uint64_t budget = 0;
  bool as_json = false;
};

int RunSearch(const SearchArgs& a) {
  static const std::map<std::string, std::pair<int, int>> kTargets{
      {"l41", {1, 4}}, {"l51", {1, 5}}, {"l62", {2, 3}}};
  if (a.target.empty() == a.matrix.empty()) {
    throw UsageError("give exactly one of --target or --matrix");
  }
  std::optional<Graph> graph;
  if (!a.target.empty()) {
    const auto it = kTargets.find(a.target);
    if (it == kTargets.end()) {
      throw UsageError("unknown target \"" + a.target + "\" (l41, l51, l62)");
    }
    graph = Graph::L(it->second.first, it->second.second);
  } else {
    graph = Graph::FromText(ReadFile(a.matrix));
  }
  SearchOptions options;
  options.find_all = a.all;
  options.node_budget = a.budget;
  const auto start = std::chrono::steady_clock::now();
  const SearchResult result = FindPerfectPartition(*graph, options);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  json j{{"graph", graph->Name()},
         {"outcome", ToString(result.outcome)},
         {"nodes", result.nodes},
         {"factorizations", result.factorizations},
         {"partitions", result.partitions.size()},
         {"decided_by_precheck", result.decided_by_precheck},
         {"seconds", seconds}};
  bool verified = true;
  if (!result.partitions.empty()) {
    const Report report = CheckPartition(result.partitions.front());
    verified = report.ok();
    j["verify"] = ReportJson(report);
    const std::string out = a.out.empty()
                                ? (a.target.empty() ? "search" : a.target) +
                                      std::string(".json")
                                : a.out;
    WriteCertificate(out, result.partitions.front());
    j["certificate"] = out;
  }
  if (a.as_json) {
    PrintJson(j);
  } else {
    std::cout << graph->Name() << ": " << ToString(result.outcome) << " after "
              << result.nodes << " nodes";
    if (result.decided_by_precheck) std::cout << " (divisibility)";
    std::cout << "\n";
    if (!result.partitions.empty()) {
      for (const auto& part : result.partitions.front().parts) {
        std::cout << " ";
        for (const auto& p : part) std::cout << " " << ToCycleString(p);
        std::cout << "\n";
      }
      if (a.all) {
        std::cout << "  " << result.partitions.size() << " partitions\n";
      }
      std::cout << "  written to " << j["certificate"].get<std::string>()
                << "\n";
    }
  }
  if (!verified) return kFailed;
  switch (result.outcome) {
    case SearchOutcome::kFound:
      return kOk;
    case SearchOutcome::kNone:
      // The named targets are known to have partitions.
      return a.target.empty() ? kOk : kFailed;
    case SearchOutcome::kBudgetExceeded:
      return kFailed;
  }
  return kFailed;
}

// ---- check ----

int RunCheck(const GraphArgs& graph_args, bool as_json) {
  const Graph g = graph_args.Get();
  const ExtendabilityResult result = CheckExtendability(g);
  if (as_json) {
    json j{{"graph", g.Name()}, {"ok", result.ok}, {"checked", result.checked}};
    if (result.counterexample) {
      j["counterexample"] = ToCycleString(*result.counterexample);
    }
    PrintJson(j);
  } else if (result.ok) {
    std::cout << g.Name() << ": all " << result.checked
              << " matchings extend to a factorization\n";
  } else {
    std::cout << g.Name() << ": " << ToCycleString(*result.counterexample)
              << " lies in no factorization\n";
  }
  return result.ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect partitions of L(r,m) into one-factorizations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "count perfect matchings");
  count.graph.Add(count_cmd);
  count_cmd->add_flag("--oracle", count.oracle, "also compute the permanent");
  count_cmd->add_flag("--json", count.as_json, "JSON output");

  EnumerateArgs enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "list perfect matchings");
  enumerate.graph.Add(enum_cmd);
  enum_cmd->add_flag("--classify", enumerate.classify, "add class tags");
  enum_cmd->add_flag("--json", enumerate.as_json, "JSON output");

  ConstructArgs construct;
  auto* construct_cmd =
      app.add_subcommand("construct", "build a partition certificate");
  construct_cmd->add_option("--target", construct.target,
                            "l61, l82, knn:N or l2nn:N")
      ->required();
  construct_cmd->add_option("-o,--out", construct.out, "certificate path");
  construct_cmd->add_option("--y0", construct.y0, "withheld zone (2..6)");
  construct_cmd->add_option("--seed", construct.seed, "zone seed, e.g. \"(1 3 2)(4 5 6)\"");
  construct_cmd->add_option("--pattern", construct.pattern, "seed pattern");
  construct_cmd->add_flag("--golden", construct.golden,
                          "compare with the printed tables");
  construct_cmd->add_flag("--audit", construct.audit,
                          "class usage and type II audit");
  construct_cmd->add_flag("--json", construct.as_json, "JSON output");

  std::string verify_path;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate file");
  verify_cmd->add_option("file", verify_path, "certificate JSON")->required();
  verify_cmd->add_flag("--json", verify_json, "JSON output");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "exact-cover search");
  search_cmd->add_option("--target", search.target, "l41, l51 or l62");
  search_cmd->add_option("--matrix", search.matrix, "0/1 matrix file");
  search_cmd->add_option("-o,--out", search.out, "certificate path");
  search_cmd->add_flag("--all", search.all, "enumerate every partition");
  search_cmd->add_option("--budget", search.budget, "node limit, 0 = none");
  search_cmd->add_flag("--json", search.as_json, "JSON output");

  GraphArgs check;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand(
      "check", "every matching lies in some one-factorization");
  check.Add(check_cmd);
  check_cmd->add_flag("--json", check_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count_cmd) {
      count.as_json |= as_json;
      return RunCount(count);
    }
    if (*enum_cmd) {
      enumerate.as_json |= as_json;
      return RunEnumerate(enumerate);
    }
    if (*construct_cmd) {
      construct.as_json |= as_json;
      return RunConstruct(construct);
    }
    if (*verify_cmd) return RunVerify(verify_path, verify_json || as_json);
    if (*search_cmd) {
      search.as_json |= as_json;
      return RunSearch(search);
    }
    if (*check_cmd) return RunCheck(check, check_json || as_json);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
