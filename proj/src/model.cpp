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

#include "udwmass/model.hpp"

#include "udwmass/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace udwmass {

std::string_view to_string(Process process)
{
  switch (process) {
    case Process::Emission: return "emission";
    case Process::Absorption: return "absorption";
  }
  return "?";
}

std::string_view to_string(MassConvention convention)
{
  switch (convention) {
    case MassConvention::SemiRel: return "semirel";
    case MassConvention::NonRelMg: return "nonrel-mg";
    case MassConvention::NonRelMe: return "nonrel-me";
    case MassConvention::Classical: return "classical";
  }
  return "?";
}

std::string_view to_string(Scaling scaling)
{
  switch (scaling) {
    case Scaling::Raw: return "raw";
    case Scaling::ClassicalUnit: return "classical";
    case Scaling::ComptonUnit: return "compton";
  }
  return "?";
}

Process parse_process(std::string_view text)
{
  if (text == "emission") return Process::Emission;
  if (text == "absorption") return Process::Absorption;
  throw ParameterError("unknown process '" + std::string(text) + "'");
}

MassConvention parse_convention(std::string_view text)
{
  if (text == "semirel") return MassConvention::SemiRel;
  if (text == "nonrel-mg" || text == "nonrel") return MassConvention::NonRelMg;
  if (text == "nonrel-me") return MassConvention::NonRelMe;
  if (text == "classical") return MassConvention::Classical;
  throw ParameterError("unknown mass convention '" + std::string(text) + "'");
}

Scaling parse_scaling(std::string_view text)
{
  if (text == "raw") return Scaling::Raw;
  if (text == "classical") return Scaling::ClassicalUnit;
  if (text == "compton") return Scaling::ComptonUnit;
  throw ParameterError("unknown scaling '" + std::string(text) + "'");
}

DetectorParams::DetectorParams(double ground_mass, double energy_gap, double speed_of_light,
                               double coupling)
  : m_g_(ground_mass), E_(energy_gap), c_(speed_of_light), lambda_(coupling)
{
  if (!(m_g_ > 0.0) || !std::isfinite(m_g_))
    throw ParameterError("ground-state mass must be positive and finite");
  if (!(E_ >= 0.0) || !std::isfinite(E_))
    throw ParameterError("energy gap must be non-negative and finite");
  if (!(c_ > 0.0) || !std::isfinite(c_))
    throw ParameterError("speed of light must be positive and finite");
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_))
    throw ParameterError("coupling must be positive and finite");
}

double DetectorParams::excited_mass() const { return m_g_ + E_ / (c_ * c_); }

DetectorParams DetectorParams::with_ground_mass(double ground_mass) const
{
  return DetectorParams(ground_mass, E_, c_, lambda_);
}

DetectorParams DetectorParams::with_energy_gap(double energy_gap) const
{
  return DetectorParams(m_g_, energy_gap, c_, lambda_);
}

DetectorParams DetectorParams::with_coupling(double coupling) const
{
  return DetectorParams(m_g_, E_, c_, coupling);
}

double derived_excited_mass(const DetectorParams& params) { return params.excited_mass(); }

double nonrelativistic_mass(const DetectorParams& params, MassConvention convention)
{
  switch (convention) {
    case MassConvention::NonRelMg: return params.ground_mass();
    case MassConvention::NonRelMe: return params.excited_mass();
    default: break;
  }
  throw InvalidConvention("convention '" + std::string(to_string(convention)) +
                          "' has no single nonrelativistic mass");
}

GaussianCoM::GaussianCoM(double width, std::array<double, 3> centre) : L_(width), x0_(centre)
{
  if (!(L_ > 0.0) || !std::isfinite(L_))
    throw ParameterError("wave-packet width must be positive and finite");
}

GaussianCoM GaussianCoM::from_momentum_spread(double momentum_spread)
{
  if (!(momentum_spread > 0.0))
    throw ParameterError("momentum spread must be positive");
  return GaussianCoM(1.0 / momentum_spread);
}

double gaussian_momentum_density(const GaussianCoM& dist, double p)
{
  const double L = dist.width();
  const double norm = std::pow(L * L / (2.0 * std::numbers::pi), 1.5);
  return norm * std::exp(-0.5 * p * p * L * L);
}

std::string FlagSet::to_string() const
{
  std::string out;
  auto append = [&out](std::string_view token) {
    if (!out.empty()) out += ';';
    out += token;
  };
  if (has(Flag::CutoffClamped)) append("CutoffClamped");
  if (has(Flag::NearAsymptote)) append("NearAsymptote");
  if (has(Flag::ComptonViolation)) append("ComptonViolation");
  return out;
}

RateResult apply_scaling(const RateResult& raw, const DetectorParams& params, Scaling scaling)
{
  double factor = 1.0;
  switch (scaling) {
    case Scaling::Raw: break;
    case Scaling::ClassicalUnit: {
      const double lambda = params.coupling();
      if (!(params.energy_gap() > 0.0))
        throw DomainError("classical-unit scaling needs a positive energy gap");
      factor = 2.0 * std::numbers::pi / (lambda * lambda * params.energy_gap());
      break;
    }
    case Scaling::ComptonUnit: {
      const double c = params.speed_of_light();
      factor = 1.0 / (params.ground_mass() * c * c);
      break;
    }
  }
  RateResult out = raw;
  out.value = raw.value * factor;
  out.abs_error_estimate = raw.abs_error_estimate * factor;
  out.scaling = scaling;
  return out;
}

std::string_view to_string(Violation violation)
{
  switch (violation) {
    case Violation::ComptonViolation: return "ComptonViolation";
    case Violation::AbsorptionAsymptote: return "AbsorptionAsymptote";
    case Violation::CutoffConstraint: return "CutoffConstraint";
  }
  return "?";
}

bool ValidationReport::has(Violation violation) const
{
  for (auto v : violations)
    if (v == violation) return true;
  return false;
}

std::string ValidationReport::describe() const
{
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    switch (violations[i]) {
      case Violation::ComptonViolation:
        os << "wave-packet width not above the Compton wavelength 1/(m_g c)";
        break;
      case Violation::AbsorptionAsymptote:
        os << "absorption requires 2E < m_e c^2";
        break;
      case Violation::CutoffConstraint:
        os << "energy gap violates the momentum-cutoff constraint";
        break;
    }
  }
  return os.str();
}

ValidationReport validate_process(const DetectorParams& params, Process process,
                                  const GaussianCoM& dist, std::optional<double> cutoff)
{
  ValidationReport report;
  const double m_g = params.ground_mass();
  const double c = params.speed_of_light();
  const double E = params.energy_gap();

  if (dist.width() <= 1.0 / (m_g * c))
    report.violations.push_back(Violation::ComptonViolation);

  if (process == Process::Absorption) {
    if (2.0 * E >= params.excited_mass() * c * c)
      report.violations.push_back(Violation::AbsorptionAsymptote);
    const double K = cutoff.value_or(dist.momentum_spread());
    const double gap = K / (m_g * c) - 1.0;
    if (E / (m_g * c * c) >= gap * gap)
      report.violations.push_back(Violation::CutoffConstraint);
  }
  return report;
}

} // namespace udwmass
