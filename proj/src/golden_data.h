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

#ifndef PERFPART_SRC_GOLDEN_DATA_H_
#define PERFPART_SRC_GOLDEN_DATA_H_

#include <map>
#include <string_view>

namespace perfpart::golden::internal {

// Generated from data/golden/*.txt; keyed by file stem.
const std::map<std::string_view, std::string_view>& EmbeddedTables();

}  // namespace perfpart::golden::internal

#endif  // PERFPART_SRC_GOLDEN_DATA_H_
