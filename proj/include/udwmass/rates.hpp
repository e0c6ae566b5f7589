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
#include "udwmass/numerics.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace udwmass {

enum class Method
{
  ClosedForm,
  Quadrature
};

/// Which template the quadrature path integrates.
enum class TemplateKind
{
  Exact,
  Expanded
};

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

/// Gaussian truncation of the radial integral, in units of the momentum scale.
inline constexpr double kGaussianTruncationSigmas = 10.0;

/// Absorption closed forms are flagged NearAsymptote above this fraction of M c^2.
inline constexpr double kNearAsymptoteFraction = 0.95;

struct RateRequest
{
  DetectorParams params;
  MassConvention convention = MassConvention::SemiRel;
  Process process = Process::Emission;
  std::variant<GaussianCoM, RadialDensity> dist = GaussianCoM(10.0);
  Method method = Method::ClosedForm;
  /// Upper momentum limit. Absorption quadrature defaults to the momentum
  /// spread 1/L of the Gaussian (or the RadialDensity's momentum_scale).
  std::optional<double> cutoff{};
  TemplateKind template_kind = TemplateKind::Exact;
  numerics::QuadratureOptions quadrature{};
};

// Closed forms with explicit masses. Bracketed expressions follow the small-p
// expansion of the templates averaged against the Gaussian (<p^2> = 3/L^2).
namespace closed_form {

/// (lambda^2 c^2 m_g / 2pi) [1 - 1/sqrt(1+x) + 3(c^2(m_g - m_e) + 2E) / (2 L^2 c^4 m_g^2 m_e (1+x)^{5/2})],
/// x = 2E/(m_g c^2).
double emission_semirel(double m_g, double m_e, double E, double c, double lambda, double L);

/// (lambda^2 c^2 M / 2pi) [1 - 1/sqrt(1+x) + 3E / (L^2 c^4 M^3 (1+x)^{5/2})], x = 2E/(M c^2).
double emission_nonrel(double M, double E, double c, double lambda, double L);

/// (lambda^2 c^2 m_e / pi) [1/sqrt(1-y) + 3(c^2(m_g - m_e) + 2E) / (2 L^2 c^4 m_e^2 m_g (1-y)^{5/2})],
/// y = 2E/(m_e c^2). Throws AsymptoteError unless y < 1.
double absorption_semirel(double m_g, double m_e, double E, double c, double lambda, double L);

/// (lambda^2 c^2 M / pi) [1/sqrt(1-y) + 3E / (L^2 c^4 M^3 (1-y)^{5/2})], y = 2E/(M c^2).
double absorption_nonrel(double M, double E, double c, double lambda, double L);

} // namespace closed_form

/// lambda^2 E / 2pi.
RateResult rate_emission_classical(const DetectorParams& params);

RateResult rate_emission_closed(const DetectorParams& params, const GaussianCoM& dist,
                                MassConvention convention);

/// Throws AsymptoteError for the classical convention (the rate diverges
/// with the mass) and whenever 2E >= M c^2.
RateResult rate_absorption_closed(const DetectorParams& params, const GaussianCoM& dist,
                                  MassConvention convention);

/// Integrates 4 pi p^2 |psi0(p)|^2 T(p) over [0, p_max] with
/// p_max = min(cutoff, radicand boundary, 10 momentum scales), times
/// lambda^2 c^2 m_g / 4pi (emission) or lambda^2 c^2 m_e / 2pi (absorption).
RateResult rate_quadrature(const RateRequest& request);

/// Dispatches on request.method and applies the output scaling.
RateResult compute_rate(const RateRequest& request, Scaling scaling = Scaling::Raw);

/// Lowest order in E/(m_g c^2).
///
/// Emission: (lambda^2 E / 2pi)(1 + a / (L m_g c)^2) with a = 3/2 (SemiRel)
/// or 3 (either nonrelativistic mass); Classical gives lambda^2 E / 2pi.
///
/// Absorption, in units of lambda^2 c^2 m_g / pi with x = E/(m_g c^2):
/// SemiRel 1 + 2x(1 + (3/4)/(L m_g c)^2), NonRelMe 1 + 2x(1 + (3/2)/(L m_g c)^2),
/// NonRelMg 1 + x(1 + 3/(L m_g c)^2).
double rate_leading_order(Process process, MassConvention convention,
                          const DetectorParams& params, const GaussianCoM& dist);

/// Emission closed form with m_g scaled by each multiplier (L fixed); the
/// sequence approaches lambda^2 E / 2pi.
std::vector<RateResult> rate_infinite_mass_limit_check(const DetectorParams& params,
                                                       const GaussianCoM& dist,
                                                       const std::vector<double>& multipliers,
                                                       MassConvention convention =
                                                         MassConvention::SemiRel);

} // namespace udwmass
