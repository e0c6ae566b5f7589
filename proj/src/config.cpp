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

#include "udwmass/config.hpp"

#include "udwmass/errors.hpp"

#include <algorithm>
#include <fstream>

namespace udwmass {

namespace {

std::string trim(const std::string& text)
{
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

} // namespace

ConfigEntries parse_config(std::istream& in)
{
  ConfigEntries entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos)
      throw ParameterError("config line " + std::to_string(number) + ": expected key=value");
    std::string key = trim(content.substr(0, eq));
    std::string value = trim(content.substr(eq + 1));
    if (key.empty())
      throw ParameterError("config line " + std::to_string(number) + ": empty key");
    const bool repeated = std::any_of(entries.begin(), entries.end(),
                                      [&key](const auto& entry) { return entry.first == key; });
    if (repeated)
      throw ParameterError("config line " + std::to_string(number) + ": repeated key '" + key +
                           "'");
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

ConfigEntries read_config(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file " + path.string());
  return parse_config(in);
}

} // namespace udwmass
