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

#include "udwmass/model.hpp"

#include <optional>

namespace udwmass {

/// Arguments of a template function. The two masses are independent on
/// purpose: equal masses with a non-zero gap express the nonrelativistic
/// model, and the emission/absorption mapping needs a negative gap.
struct TemplateArgs
{
  double p = 0.0; ///< initial CoM momentum magnitude
  double ground_mass = 1.0;
  double excited_mass = 1.0;
  double energy_gap = 0.0;
  double c = 1.0;
};

/// Template arguments for a detector under a mass convention. SemiRel uses
/// (m_g, m_e); the nonrelativistic conventions use (M, M).
TemplateArgs template_args(const DetectorParams& params, MassConvention convention, double p);

/// Emission template
///   2 - (sqrt(A+) - sqrt(A-)) / p,
///   A(+/-) = p^2 m_g/m_e +/- 2 p m_g c + m_g^2 c^2 + 2 E m_g.
/// Since A+ - A- = 4 p m_g c the difference of roots is evaluated without the
/// 1/p cancellation, and p = 0 returns the analytic limit.
/// Throws DomainError if a radicand is negative.
double template_emission(const TemplateArgs& args);

/// Absorption template
///   (sqrt(B+) - sqrt(B-)) / p,
///   B(+/-) = p^2 m_e/m_g +/- 2 p m_e c + m_e^2 c^2 - 2 m_e E.
/// Throws DomainError past the radicand boundary.
double template_absorption(const TemplateArgs& args);

/// Second-order small-p expansion of the emission template.
double template_emission_expanded(const TemplateArgs& args);

/// Second-order small-p expansion of the absorption template.
double template_absorption_expanded(const TemplateArgs& args);

/// p -> 0 value: emission 2 - 2/sqrt(1 + 2E/(m_g c^2)),
/// absorption 2/sqrt(1 - 2E/(m_e c^2)). The momentum in args is ignored.
double template_small_p_limit(Process process, const TemplateArgs& args);

/// Smallest p > 0 at which one of the process's radicands vanishes, if any.
/// The momentum in args is ignored.
std::optional<double> radicand_boundary(Process process, const TemplateArgs& args);

} // namespace udwmass
