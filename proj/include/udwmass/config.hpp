// Copyright 2026 The udwmass Authors
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

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace udwmass {

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Parses key=value lines. Blank lines and lines starting with '#' are
/// skipped, whitespace around keys and values is trimmed. Throws
/// ParameterError on a line without '=' or with an empty key, and on a
/// repeated key.
ConfigEntries parse_config(std::istream& in);
ConfigEntries read_config(const std::filesystem::path& path);

} // namespace udwmass
