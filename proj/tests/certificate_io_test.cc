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

#include <filesystem>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "perfpart/construct_group.h"

namespace perfpart {
namespace {

TEST(CertificateIoTest, RoundTripIsByteStable) {
  for (const PartitionCertificate& cert :
       {KnnPartition(4), L2nnPartition(3)}) {
    std::string text = CertificateToJson(cert);
    PartitionCertificate back = CertificateFromJson(text);
    EXPECT_EQ(back.graph, cert.graph);
    EXPECT_EQ(back.complete, cert.complete);
    EXPECT_EQ(CertificateToJson(back), text);
    EXPECT_TRUE(CheckPartition(back).ok());
  }
}

TEST(CertificateIoTest, OrderOfInputDoesNotMatter) {
  PartitionCertificate cert = KnnPartition(4);
  std::string text = CertificateToJson(cert);
  std::swap(cert.parts.front(), cert.parts.back());
  std::swap(cert.parts[1][0], cert.parts[1][3]);
  EXPECT_EQ(CertificateToJson(cert), text);
}

TEST(CertificateIoTest, Layout) {
  std::string text = CertificateToJson(KnnPartition(2));
  EXPECT_EQ(text,
            "{\n"
            "  \"graph\": {\"kind\": \"L\", \"r\": 0, \"m\": 1},\n"
            "  \"n\": 2,\n"
            "  \"degree\": 2,\n"
            "  \"complete\": true,\n"
            "  \"parts\": [\n"
            "    [[1,2], [2,1]]\n"
            "  ]\n"
            "}\n");
}

TEST(CertificateIoTest, MatrixGraph) {
  PartitionCertificate cert{Graph::Circulant(3, {0, 1}), false,
                            {{Permutation{1, 2, 3}, Permutation{2, 3, 1}}}};
  std::string text = CertificateToJson(cert);
  EXPECT_NE(text.find("\"rows\": [\"110\", \"011\", \"101\"]"),
            std::string::npos);
  PartitionCertificate back = CertificateFromJson(text);
  EXPECT_EQ(back.graph, cert.graph);
  EXPECT_FALSE(back.complete);
  EXPECT_TRUE(CheckPartition(back).ok());
}

TEST(CertificateIoTest, RejectsMalformed) {
  EXPECT_THROW(CertificateFromJson("{"), std::invalid_argument);
  EXPECT_THROW(CertificateFromJson("{\"n\": 3}"), std::invalid_argument);
  EXPECT_THROW(CertificateFromJson(
                   R"({"graph": {"kind": "Q"}, "n": 3, "parts": []})"),
               std::invalid_argument);
  EXPECT_THROW(CertificateFromJson(
                   R"({"graph": {"kind": "L", "r": 1, "m": 4}, "n": 5,
                       "parts": []})"),
               std::invalid_argument);
  EXPECT_THROW(CertificateFromJson(
                   R"({"graph": {"kind": "L", "r": 1, "m": 4}, "n": 4,
                       "degree": 4, "parts": []})"),
               std::invalid_argument);
  EXPECT_THROW(CertificateFromJson(
                   R"({"graph": {"kind": "L", "r": 1, "m": 4}, "n": 4,
                       "parts": [[[1, 1, 2, 3]]]})"),
               std::invalid_argument);
}

TEST(CertificateIoTest, Files) {
  auto path = std::filesystem::temp_directory_path() / "perfpart_io_test.json";
  PartitionCertificate cert = KnnPartition(3);
  WriteCertificate(path.string(), cert);
  EXPECT_EQ(ReadFile(path.string()), CertificateToJson(cert));
  EXPECT_EQ(ReadCertificate(path.string()).parts.size(), 2U);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadCertificate(path.string()), std::runtime_error);
}

}  // namespace
}  // namespace perfpart
