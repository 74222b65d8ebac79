// Copyright 2026 The lesionsym Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lesionsym::csv {

// Comma-separated values without quoting or escaping; every format this
// project reads and writes uses plain identifiers and numbers. CRLF input is
// tolerated, output is always LF.

std::vector<std::string> split_line(std::string_view line);

// Parses into rows of fields. Empty lines are skipped.
std::vector<std::vector<std::string>> parse(std::string_view text);

std::string join(const std::vector<std::string>& fields);

}  // namespace lesionsym::csv
