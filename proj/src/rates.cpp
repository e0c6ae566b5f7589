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

#include "udwmass/rates.hpp"

#include "udwmass/errors.hpp"
#include "udwmass/templates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace udwmass {

namespace {

constexpr double kPi = std::numbers::pi;

double one_minus_inverse_sqrt(double x)
{
  const double root = std::sqrt(1.0 + x);
  return x / (root * (1.0 + root));
}

void check_absorption_asymptote(double y)
{
  if (!(y < 1.0))
    throw AsymptoteError("absorption rate is non-real for 2E >= M c^2 (2E/(M c^2) = " +
                         std::to_string(y) + ")");
}

FlagSet compton_flags(const DetectorParams& params, const GaussianCoM& dist)
{
  FlagSet flags;
  if (dist.width() <= 1.0 / (params.ground_mass() * params.speed_of_light()))
    flags.set(Flag::ComptonViolation);
  return flags;
}

} // namespace

std::string_view to_string(Method method)
{
  return method == Method::ClosedForm ? "closed" : "quadrature";
}

Method parse_method(std::string_view text)
{
  if (text == "closed") return Method::ClosedForm;
  if (text == "quadrature") return Method::Quadrature;
  throw ParameterError("unknown method '" + std::string(text) + "'");
}

namespace closed_form {

double emission_semirel(double m_g, double m_e, double E, double c, double lambda, double L)
{
  const double c2 = c * c;
  const double x = 2.0 * E / (m_g * c2);
  const double correction = 3.0 * (c2 * (m_g - m_e) + 2.0 * E) /
                            (2.0 * L * L * c2 * c2 * m_g * m_g * m_e * std::pow(1.0 + x, 2.5));
  return lambda * lambda * c2 * m_g / (2.0 * kPi) * (one_minus_inverse_sqrt(x) + correction);
}

double emission_nonrel(double M, double E, double c, double lambda, double L)
{
  const double c2 = c * c;
  const double x = 2.0 * E / (M * c2);
  const double correction = 3.0 * E / (L * L * c2 * c2 * M * M * M * std::pow(1.0 + x, 2.5));
  return lambda * lambda * c2 * M / (2.0 * kPi) * (one_minus_inverse_sqrt(x) + correction);
}

double absorption_semirel(double m_g, double m_e, double E, double c, double lambda, double L)
{
  const double c2 = c * c;
  const double y = 2.0 * E / (m_e * c2);
  check_absorption_asymptote(y);
  const double correction = 3.0 * (c2 * (m_g - m_e) + 2.0 * E) /
                            (2.0 * L * L * c2 * c2 * m_e * m_e * m_g * std::pow(1.0 - y, 2.5));
  return lambda * lambda * c2 * m_e / kPi * (1.0 / std::sqrt(1.0 - y) + correction);
}

double absorption_nonrel(double M, double E, double c, double lambda, double L)
{
  const double c2 = c * c;
  const double y = 2.0 * E / (M * c2);
  check_absorption_asymptote(y);
  const double correction = 3.0 * E / (L * L * c2 * c2 * M * M * M * std::pow(1.0 - y, 2.5));
  return lambda * lambda * c2 * M / kPi * (1.0 / std::sqrt(1.0 - y) + correction);
}

} // namespace closed_form

RateResult rate_emission_classical(const DetectorParams& params)
{
  const double lambda = params.coupling();
  RateResult out;
  out.value = lambda * lambda * params.energy_gap() / (2.0 * kPi);
  return out;
}

RateResult rate_emission_closed(const DetectorParams& params, const GaussianCoM& dist,
                                MassConvention convention)
{
  if (convention == MassConvention::Classical) return rate_emission_classical(params);

  const double E = params.energy_gap();
  const double c = params.speed_of_light();
  const double lambda = params.coupling();
  const double L = dist.width();
  RateResult out;
  out.flags = compton_flags(params, dist);
  if (convention == MassConvention::SemiRel)
    out.value = closed_form::emission_semirel(params.ground_mass(), params.excited_mass(), E, c,
                                              lambda, L);
  else
    out.value =
      closed_form::emission_nonrel(nonrelativistic_mass(params, convention), E, c, lambda, L);
  out.abs_error_estimate = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  return out;
}

RateResult rate_absorption_closed(const DetectorParams& params, const GaussianCoM& dist,
                                  MassConvention convention)
{
  if (convention == MassConvention::Classical)
    throw AsymptoteError("classical absorption rate undefined: it diverges with the mass");

  const double E = params.energy_gap();
  const double c = params.speed_of_light();
  const double lambda = params.coupling();
  const double L = dist.width();
  const double M = convention == MassConvention::SemiRel ? params.excited_mass()
                                                          : nonrelativistic_mass(params, convention);
  RateResult out;
  out.flags = compton_flags(params, dist);
  if (2.0 * E > kNearAsymptoteFraction * M * c * c) out.flags.set(Flag::NearAsymptote);
  if (convention == MassConvention::SemiRel)
    out.value = closed_form::absorption_semirel(params.ground_mass(), M, E, c, lambda, L);
  else
    out.value = closed_form::absorption_nonrel(M, E, c, lambda, L);
  out.abs_error_estimate = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  return out;
}

RateResult rate_quadrature(const RateRequest& request)
{
  const DetectorParams& params = request.params;
  if (request.convention == MassConvention::Classical) {
    if (request.process == Process::Absorption)
      throw AsymptoteError("classical absorption rate undefined: it diverges with the mass");
    return rate_emission_classical(params);
  }

  const TemplateArgs base = template_args(params, request.convention, 0.0);
  const bool emission = request.process == Process::Emission;

  std::function<double(double)> density;
  double scale;
  FlagSet flags;
  if (const auto* gaussian = std::get_if<GaussianCoM>(&request.dist)) {
    density = [dist = *gaussian](double p) { return gaussian_momentum_density(dist, p); };
    scale = gaussian->momentum_spread();
    flags = compton_flags(params, *gaussian);
  } else {
    const auto& radial = std::get<RadialDensity>(request.dist);
    density = radial.density;
    scale = radial.momentum_scale;
  }

  double p_max = kGaussianTruncationSigmas * scale;
  std::optional<double> cutoff = request.cutoff;
  if (!emission && !cutoff) cutoff = scale;
  if (cutoff) p_max = std::min(p_max, *cutoff);

  if (request.template_kind == TemplateKind::Exact) {
    if (const auto boundary = radicand_boundary(request.process, base);
        boundary && *boundary < p_max) {
      p_max = *boundary;
      flags.set(Flag::CutoffClamped);
    }
  }
  if (!(p_max > 0.0)) throw DomainError("momentum integration domain is empty");

  auto template_at = [&](double p) {
    TemplateArgs args = base;
    args.p = p;
    if (request.template_kind == TemplateKind::Expanded)
      return emission ? template_emission_expanded(args) : template_absorption_expanded(args);
    return emission ? template_emission(args) : template_absorption(args);
  };
  auto integrand = [&](double p) {
    return 4.0 * kPi * p * p * density(p) * template_at(p);
  };

  const auto outcome = numerics::integrate_radial(integrand, 0.0, p_max, request.quadrature);

  const double lambda = params.coupling();
  const double c2 = params.speed_of_light() * params.speed_of_light();
  const double prefactor = emission ? lambda * lambda * c2 * base.ground_mass / (4.0 * kPi)
                                    : lambda * lambda * c2 * base.excited_mass / (2.0 * kPi);
  RateResult out;
  out.value = prefactor * outcome.value;
  out.abs_error_estimate = prefactor * outcome.abs_error;
  out.flags = flags;
  if (!emission && 2.0 * params.energy_gap() > kNearAsymptoteFraction * base.excited_mass * c2)
    out.flags.set(Flag::NearAsymptote);
  return out;
}

RateResult compute_rate(const RateRequest& request, Scaling scaling)
{
  RateResult raw;
  if (request.method == Method::Quadrature) {
    raw = rate_quadrature(request);
  } else {
    const auto* gaussian = std::get_if<GaussianCoM>(&request.dist);
    if (!gaussian) throw ParameterError("closed-form rates require a Gaussian CoM state");
    raw = request.process == Process::Emission
            ? rate_emission_closed(request.params, *gaussian, request.convention)
            : rate_absorption_closed(request.params, *gaussian, request.convention);
  }
  return apply_scaling(raw, request.params, scaling);
}

double rate_leading_order(Process process, MassConvention convention,
                          const DetectorParams& params, const GaussianCoM& dist)
{
  const double m_g = params.ground_mass();
  const double c = params.speed_of_light();
  const double lambda = params.coupling();
  const double E = params.energy_gap();
  const double inv_width2 = 1.0 / std::pow(dist.width() * m_g * c, 2);

  if (process == Process::Emission) {
    const double classical = lambda * lambda * E / (2.0 * kPi);
    switch (convention) {
      case MassConvention::Classical: return classical;
      case MassConvention::SemiRel: return classical * (1.0 + 1.5 * inv_width2);
      case MassConvention::NonRelMg:
      case MassConvention::NonRelMe: return classical * (1.0 + 3.0 * inv_width2);
    }
  }

  const double scale = lambda * lambda * c * c * m_g / kPi;
  const double x = E / (m_g * c * c);
  switch (convention) {
    case MassConvention::Classical:
      throw AsymptoteError("classical absorption rate undefined: it diverges with the mass");
    case MassConvention::SemiRel: return scale * (1.0 + 2.0 * x * (1.0 + 0.75 * inv_width2));
    case MassConvention::NonRelMe: return scale * (1.0 + 2.0 * x * (1.0 + 1.5 * inv_width2));
    case MassConvention::NonRelMg: return scale * (1.0 + x * (1.0 + 3.0 * inv_width2));
  }
  return 0.0;
}

std::vector<RateResult> rate_infinite_mass_limit_check(const DetectorParams& params,
                                                       const GaussianCoM& dist,
                                                       const std::vector<double>& multipliers,
                                                       MassConvention convention)
{
  std::vector<RateResult> out;
  out.reserve(multipliers.size());
  for (double multiplier : multipliers)
    out.push_back(rate_emission_closed(
      params.with_ground_mass(params.ground_mass() * multiplier), dist, convention));
  return out;
}

} // namespace udwmass
