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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "perfpart/certificate_io.h"
#include "perfpart/construct_group.h"
#include "perfpart/construct_l61.h"
#include "perfpart/construct_l82.h"
#include "perfpart/counting.h"
#include "perfpart/graph.h"
#include "perfpart/matchings.h"
#include "perfpart/search.h"
#include "perfpart/verifier.h"

namespace py = pybind11;
using namespace perfpart;

namespace {

Graph MakeGraph(std::optional<int> r, std::optional<int> m,
                std::optional<std::vector<std::string>> rows) {
  if (rows) {
    std::string text;
    for (const auto& row : *rows) text += row + "\n";
    return Graph::FromText(text);
  }
  if (!r || !m) throw std::invalid_argument("give r and m, or rows");
  return *r == 0 ? Graph::Complete(*m) : Graph::L(*r, *m);
}

// Python ints are arbitrary precision; go through the decimal string.
py::object ToPyInt(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(ToString(v));
}

py::dict ReportDict(const Report& report) {
  py::list violations;
  for (const auto& v : report.violations) {
    violations.append(py::make_tuple(ToString(v.kind), v.message));
  }
  py::dict d;
  d["ok"] = report.ok();
  d["violations"] = violations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_perfpart, m) {
  m.doc() = "Perfect partitions of L(r,m) into one-factorizations";

  m.def("count_matchings",
        [](int r, int mm) { return ToPyInt(CountMatchings(r, mm)); },
        py::arg("r"), py::arg("m"));
  m.def(
      "permanent",
      [](const std::vector<std::string>& rows) {
        return ToPyInt(RyserPermanent(MakeGraph({}, {}, rows)));
      },
      py::arg("rows"));
  m.def(
      "necessary_condition",
      [](std::optional<int> r, std::optional<int> mm,
         std::optional<std::vector<std::string>> rows, bool oracle) {
        const CountReport rep =
            NecessaryCondition(MakeGraph(r, mm, rows), oracle);
        py::dict d;
        d["n"] = rep.n;
        d["degree"] = rep.degree;
        d["divisible"] = rep.divisible;
        d["rook_count"] = rep.rook_count ? ToPyInt(*rep.rook_count) : py::none();
        d["oracle_count"] =
            rep.oracle_count ? ToPyInt(*rep.oracle_count) : py::none();
        return d;
      },
      py::arg("r") = py::none(), py::arg("m") = py::none(),
      py::arg("rows") = py::none(), py::arg("oracle") = false);
  m.def(
      "enumerate",
      [](std::optional<int> r, std::optional<int> mm,
         std::optional<std::vector<std::string>> rows) {
        const MatchingSet ms = Enumerate(MakeGraph(r, mm, rows));
        std::vector<std::string> out;
        for (const auto& p : ms.perms()) {
          out.push_back(ToCycleString(p));
        }
        return out;
      },
      py::arg("r") = py::none(), py::arg("m") = py::none(),
      py::arg("rows") = py::none());
  m.def(
      "parse_cycles",
      [](const std::string& text, int n) {
        const auto& images = ParseCycles(text, n).images();
        return std::vector<int>(images.begin(), images.end());
      },
      py::arg("text"), py::arg("n"));
  m.def(
      "cycle_string",
      [](const std::vector<int>& images) {
        return ToCycleString(Permutation(images));
      },
      py::arg("images"));

  m.def(
      "build_l61",
      [](int y0, const std::string& seed, const std::string& pattern) {
        return CertificateToJson(
            l61::BuildL61({y0, seed, pattern}).certificate);
      },
      py::arg("y0") = 5, py::arg("seed") = l61::L61Options{}.seed,
      py::arg("pattern") = l61::L61Options{}.pattern,
      "L(6,1) certificate as JSON text");
  m.def("build_l82",
        [] { return CertificateToJson(l82::BuildL82().certificate); },
        "L(8,2) certificate as JSON text");
  m.def(
      "knn_partition",
      [](int n) { return CertificateToJson(KnnPartition(n)); }, py::arg("n"));
  m.def(
      "l2nn_partition",
      [](int n) { return CertificateToJson(L2nnPartition(n)); }, py::arg("n"));

  m.def(
      "verify",
      [](const std::string& certificate_json) {
        return ReportDict(CheckPartition(CertificateFromJson(certificate_json)));
      },
      py::arg("certificate_json"));
  m.def(
      "search",
      [](std::optional<int> r, std::optional<int> mm,
         std::optional<std::vector<std::string>> rows, bool find_all,
         std::uint64_t budget) {
        SearchOptions options;
        options.find_all = find_all;
        options.node_budget = budget;
        SearchResult result;
        const Graph g = MakeGraph(r, mm, rows);
        {
          py::gil_scoped_release release;
          result = FindPerfectPartition(g, options);
        }
        py::dict d;
        d["outcome"] = ToString(result.outcome);
        d["nodes"] = result.nodes;
        py::list partitions;
        for (const auto& cert : result.partitions) {
          partitions.append(CertificateToJson(cert));
        }
        d["partitions"] = partitions;
        return d;
      },
      py::arg("r") = py::none(), py::arg("m") = py::none(),
      py::arg("rows") = py::none(), py::arg("find_all") = false,
      py::arg("budget") = 0);
  m.def(
      "check_extendability",
      [](std::optional<int> r, std::optional<int> mm,
         std::optional<std::vector<std::string>> rows) {
        const auto result = CheckExtendability(MakeGraph(r, mm, rows));
        return py::make_tuple(
            result.ok, result.checked,
            result.counterexample
                ? py::object(py::str(ToCycleString(*result.counterexample)))
                : py::none());
      },
      py::arg("r") = py::none(), py::arg("m") = py::none(),
      py::arg("rows") = py::none());
}
