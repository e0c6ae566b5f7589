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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace udwmass::verify {

struct Check
{
  std::string description;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteReport
{
  std::string name;
  std::vector<Check> checks;

  bool passed() const;
};

/// Template mapping identity and the equal-mass reduction of the closed forms.
SuiteReport identity_suite();
/// Golden-rule shape against the templates for both processes.
SuiteReport oracle_suite();
/// Quadrature of the templates against the Gaussian closed forms.
SuiteReport quadrature_suite();
/// Infinite-mass and large-gap limits.
SuiteReport limits_suite();

const std::vector<std::string>& suite_names();

/// Runs "identity", "oracle", "quadrature", "limits" or "all".
/// Throws ParameterError for an unknown selector.
std::vector<SuiteReport> run_suites(std::string_view selector);

void print_report(std::ostream& out, const SuiteReport& report);

} // namespace udwmass::verify
