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

#include "udwmass/templates.hpp"

#include "udwmass/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace udwmass {

namespace {

void check_args(const TemplateArgs& args)
{
  if (!(args.ground_mass > 0.0) || !(args.excited_mass > 0.0))
    throw ParameterError("template masses must be positive");
  if (!(args.c > 0.0)) throw ParameterError("speed of light must be positive");
  if (!(args.p >= 0.0)) throw ParameterError("template momentum must be non-negative");
}

void check_radicand(double value, const char* which)
{
  if (value < 0.0)
    throw DomainError(std::string(which) + " radicand is negative (" + std::to_string(value) +
                      ")");
}

// 1 - 1/sqrt(1 + x) without cancellation at small x.
double one_minus_inverse_sqrt(double x)
{
  const double root = std::sqrt(1.0 + x);
  return x / (root * (1.0 + root));
}

// Smallest positive root of a p^2 + b p + c0 with a > 0.
std::optional<double> smallest_positive_root(double a, double b, double c0)
{
  double disc = std::fma(b, b, -4.0 * a * c0);
  if (disc < 0.0) {
    if (-disc > 8.0 * std::numeric_limits<double>::epsilon() * b * b) return std::nullopt;
    disc = 0.0;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::optional<double> best;
  auto consider = [&best](double root) {
    if (root > 0.0 && std::isfinite(root) && (!best || root < *best)) best = root;
  };
  consider(q / a);
  if (q != 0.0) consider(c0 / q);
  return best;
}

} // namespace

TemplateArgs template_args(const DetectorParams& params, MassConvention convention, double p)
{
  TemplateArgs args;
  args.p = p;
  args.energy_gap = params.energy_gap();
  args.c = params.speed_of_light();
  switch (convention) {
    case MassConvention::SemiRel:
      args.ground_mass = params.ground_mass();
      args.excited_mass = params.excited_mass();
      break;
    case MassConvention::NonRelMg:
    case MassConvention::NonRelMe:
      args.ground_mass = args.excited_mass = nonrelativistic_mass(params, convention);
      break;
    case MassConvention::Classical:
      throw InvalidConvention("the classical convention has no template function");
  }
  return args;
}

double template_emission(const TemplateArgs& args)
{
  check_args(args);
  const double p = args.p;
  const double m = args.ground_mass;
  const double c = args.c;
  const double mc = m * c;
  const double kinetic = p * p * m / args.excited_mass + 2.0 * args.energy_gap * m;
  const double cross = 2.0 * p * mc;
  const double plus = kinetic + cross + mc * mc;
  const double minus = kinetic - cross + mc * mc;
  check_radicand(plus, "emission (+)");
  check_radicand(minus, "emission (-)");

  const double root_plus = std::sqrt(plus);
  const double root_minus = std::sqrt(minus);
  const double sum = root_plus + root_minus;
  if (!(sum > 0.0)) throw DomainError("emission template is singular at this point");

  // 2 - 4 m c / (sqrt(A+) + sqrt(A-)) = 2 [(sqrt(A+) - mc) + (sqrt(A-) - mc)] / sum,
  // with sqrt(X) - mc = (X - m^2 c^2) / (sqrt(X) + mc).
  const double inv_plus = 1.0 / (root_plus + mc);
  const double inv_minus = 1.0 / (root_minus + mc);
  const double numerator =
    kinetic * (inv_plus + inv_minus) - 2.0 * cross * cross * inv_plus * inv_minus / sum;
  return 2.0 * numerator / sum;
}

double template_absorption(const TemplateArgs& args)
{
  check_args(args);
  const double p = args.p;
  const double m = args.excited_mass;
  const double c = args.c;
  const double mc = m * c;
  const double base = p * p * m / args.ground_mass + mc * mc - 2.0 * m * args.energy_gap;
  const double cross = 2.0 * p * mc;
  const double plus = base + cross;
  const double minus = base - cross;
  check_radicand(plus, "absorption (+)");
  check_radicand(minus, "absorption (-)");
  const double sum = std::sqrt(plus) + std::sqrt(minus);
  if (!(sum > 0.0)) throw DomainError("absorption template is singular at this point");
  return 4.0 * mc / sum;
}

double template_emission_expanded(const TemplateArgs& args)
{
  check_args(args);
  const double m_g = args.ground_mass;
  const double m_e = args.excited_mass;
  const double c2 = args.c * args.c;
  const double E = args.energy_gap;
  const double x = 2.0 * E / (m_g * c2);
  if (!(1.0 + x > 0.0)) throw DomainError("emission expansion needs 1 + 2E/(m_g c^2) > 0");
  const double curvature =
    (c2 * (m_g - m_e) + 2.0 * E) / (c2 * c2 * m_g * m_g * m_e * std::pow(1.0 + x, 2.5));
  return 2.0 * one_minus_inverse_sqrt(x) + args.p * args.p * curvature;
}

double template_absorption_expanded(const TemplateArgs& args)
{
  check_args(args);
  const double m_g = args.ground_mass;
  const double m_e = args.excited_mass;
  const double c2 = args.c * args.c;
  const double E = args.energy_gap;
  const double y = 2.0 * E / (m_e * c2);
  if (!(1.0 - y > 0.0)) throw DomainError("absorption expansion needs 2E < m_e c^2");
  const double curvature =
    (c2 * (m_g - m_e) + 2.0 * E) / (c2 * c2 * m_e * m_e * m_g * std::pow(1.0 - y, 2.5));
  return 2.0 / std::sqrt(1.0 - y) + args.p * args.p * curvature;
}

double template_small_p_limit(Process process, const TemplateArgs& args)
{
  TemplateArgs at_rest = args;
  at_rest.p = 0.0;
  check_args(at_rest);
  const double c2 = args.c * args.c;
  if (process == Process::Emission) {
    const double x = 2.0 * args.energy_gap / (args.ground_mass * c2);
    if (!(1.0 + x > 0.0)) throw DomainError("emission limit needs 1 + 2E/(m_g c^2) > 0");
    return 2.0 * one_minus_inverse_sqrt(x);
  }
  const double y = 2.0 * args.energy_gap / (args.excited_mass * c2);
  if (!(1.0 - y > 0.0)) throw DomainError("absorption limit needs 2E < m_e c^2");
  return 2.0 / std::sqrt(1.0 - y);
}

std::optional<double> radicand_boundary(Process process, const TemplateArgs& args)
{
  TemplateArgs at_rest = args;
  at_rest.p = 0.0;
  check_args(at_rest);
  const double c = args.c;
  const double E = args.energy_gap;
  double a;
  double b;
  double c0;
  if (process == Process::Emission) {
    const double m = args.ground_mass;
    a = m / args.excited_mass;
    b = 2.0 * m * c;
    c0 = m * m * c * c + 2.0 * E * m;
  } else {
    const double m = args.excited_mass;
    a = m / args.ground_mass;
    b = 2.0 * m * c;
    c0 = m * m * c * c - 2.0 * m * E;
  }
  const auto minus_branch = smallest_positive_root(a, -b, c0);
  const auto plus_branch = smallest_positive_root(a, b, c0);
  if (minus_branch && plus_branch) return std::min(*minus_branch, *plus_branch);
  return minus_branch ? minus_branch : plus_branch;
}

} // namespace udwmass
