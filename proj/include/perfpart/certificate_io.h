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

// Certificate JSON:
//
//   {
//     "graph": {"kind": "L", "r": R, "m": M}
//            | {"kind": "matrix", "rows": ["0110", ...]},
//     "n": N,
//     "degree": D,
//     "complete": true,
//     "parts": [[[2, 1, 4, 3], ...], ...]
//   }
//
// Image arrays are 1-based. K_{n,n} is written as kind "L" with r = 0 and
// m = 1; its size comes from "n". The writer emits one part per line in
// canonical order, so output is byte-stable.

#ifndef PERFPART_CERTIFICATE_IO_H_
#define PERFPART_CERTIFICATE_IO_H_

#include <string>
#include <string_view>

#include "perfpart/verifier.h"

namespace perfpart {

// Canonicalizes a copy before writing.
std::string CertificateToJson(const PartitionCertificate& cert);

// Throws std::invalid_argument on malformed input.
PartitionCertificate CertificateFromJson(std::string_view json);

void WriteCertificate(const std::string& path,
                      const PartitionCertificate& cert);
// Throws std::runtime_error when the file cannot be read.
PartitionCertificate ReadCertificate(const std::string& path);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

}  // namespace perfpart

#endif  // PERFPART_CERTIFICATE_IO_H_
