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

#include "perfpart/certificate_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace perfpart {
namespace {

using nlohmann::json;

std::string GraphJson(const Graph& graph) {
  if (const auto& p = graph.l_params()) {
    return "{\"kind\": \"L\", \"r\": " + std::to_string(p->r) +
           ", \"m\": " + std::to_string(p->m) + "}";
  }
  std::string out = "{\"kind\": \"matrix\", \"rows\": [";
  const auto rows = graph.RowStrings();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + rows[i] + "\"";
  }
  return out + "]}";
}

std::string ImagesJson(const Permutation& p) {
  std::string out = "[";
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(p(i));
  }
  return out + "]";
}

Graph GraphFromJson(const json& g, int n) {
  const std::string kind = g.at("kind").get<std::string>();
  if (kind == "L") {
    const int r = g.at("r").get<int>();
    const int m = g.at("m").get<int>();
    if (r == 0) return Graph::Complete(n);
    return Graph::L(r, m);
  }
  if (kind == "matrix") {
    std::string text;
    for (const auto& row : g.at("rows")) text += row.get<std::string>() + "\n";
    return Graph::FromText(text);
  }
  throw std::invalid_argument("unknown graph kind \"" + kind + "\"");
}

}  // namespace

std::string CertificateToJson(const PartitionCertificate& cert) {
  PartitionCertificate sorted = cert;
  sorted.Canonicalize();
  const Graph& g = sorted.graph;
  std::string out = "{\n";
  out += "  \"graph\": " + GraphJson(g) + ",\n";
  out += "  \"n\": " + std::to_string(g.n()) + ",\n";
  out += "  \"degree\": " +
         std::to_string(g.IsRegular() ? g.Degree() : -1) + ",\n";
  out += std::string("  \"complete\": ") +
         (sorted.complete ? "true" : "false") + ",\n";
  out += "  \"parts\": [";
  for (std::size_t k = 0; k < sorted.parts.size(); ++k) {
    out += k ? ",\n    [" : "\n    [";
    for (std::size_t i = 0; i < sorted.parts[k].size(); ++i) {
      if (i) out += ", ";
      out += ImagesJson(sorted.parts[k][i]);
    }
    out += "]";
  }
  out += sorted.parts.empty() ? "]\n" : "\n  ]\n";
  return out + "}\n";
}

PartitionCertificate CertificateFromJson(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const int n = doc.at("n").get<int>();
    Graph graph = GraphFromJson(doc.at("graph"), n);
    if (graph.n() != n) {
      throw std::invalid_argument("\"n\" is " + std::to_string(n) +
                                  " but the graph has " +
                                  std::to_string(graph.n()) + " rows");
    }
    if (doc.contains("degree") && graph.IsRegular() &&
        doc.at("degree").get<int>() != graph.Degree()) {
      throw std::invalid_argument("\"degree\" disagrees with the graph");
    }
    PartitionCertificate cert{std::move(graph),
                              doc.value("complete", false), {}};
    for (const auto& part : doc.at("parts")) {
      auto& members = cert.parts.emplace_back();
      for (const auto& images : part) {
        members.emplace_back(images.get<std::vector<int>>());
      }
    }
    return cert;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") +
                                e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void WriteCertificate(const std::string& path,
                      const PartitionCertificate& cert) {
  WriteFile(path, CertificateToJson(cert));
}

PartitionCertificate ReadCertificate(const std::string& path) {
  return CertificateFromJson(ReadFile(path));
}

}  // namespace perfpart
