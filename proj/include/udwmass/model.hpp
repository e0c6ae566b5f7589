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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace udwmass {

// Natural units with hbar = 1 throughout; c is carried explicitly.

enum class Process
{
  Emission,
  Absorption
};

enum class MassConvention
{
  SemiRel,  ///< mass-energy equivalence: m_g and m_e = m_g + E/c^2
  NonRelMg, ///< single kinetic mass M = m_g
  NonRelMe, ///< single kinetic mass M = m_e
  Classical ///< fixed trajectory, no CoM dynamics
};

enum class Scaling
{
  Raw,
  ClassicalUnit, ///< rate * 2pi / (lambda^2 E): classical emission rate -> 1
  ComptonUnit    ///< rate / (m_g c^2)
};

std::string_view to_string(Process process);
std::string_view to_string(MassConvention convention);
std::string_view to_string(Scaling scaling);

Process parse_process(std::string_view text);
MassConvention parse_convention(std::string_view text);
Scaling parse_scaling(std::string_view text);

/// Detector description. Construction throws ParameterError unless
/// m_g > 0, E >= 0, c > 0 and lambda > 0.
class DetectorParams
{
public:
  DetectorParams(double ground_mass, double energy_gap, double speed_of_light = 1.0,
                 double coupling = 1.0);

  double ground_mass() const { return m_g_; }
  double energy_gap() const { return E_; }
  double speed_of_light() const { return c_; }
  double coupling() const { return lambda_; }

  /// m_g + E / c^2.
  double excited_mass() const;

  /// Copy with a different ground mass (everything else kept).
  DetectorParams with_ground_mass(double ground_mass) const;
  DetectorParams with_energy_gap(double energy_gap) const;
  DetectorParams with_coupling(double coupling) const;

private:
  double m_g_;
  double E_;
  double c_;
  double lambda_;
};

double derived_excited_mass(const DetectorParams& params);

/// Kinetic mass M used by a nonrelativistic convention.
/// Throws InvalidConvention for SemiRel and Classical.
double nonrelativistic_mass(const DetectorParams& params, MassConvention convention);

/// Isotropic Gaussian CoM packet psi(x) ~ exp(-|x - x0|^2 / L^2).
/// The centre only contributes a phase in momentum space and never
/// enters a rate.
class GaussianCoM
{
public:
  explicit GaussianCoM(double width, std::array<double, 3> centre = {0.0, 0.0, 0.0});

  /// Builds the packet from its momentum spread L_p = 1/L.
  static GaussianCoM from_momentum_spread(double momentum_spread);

  double width() const { return L_; }
  double momentum_spread() const { return 1.0 / L_; }
  const std::array<double, 3>& centre() const { return x0_; }

private:
  double L_;
  std::array<double, 3> x0_;
};

/// |psi0(p)|^2 = (L^2 / 2pi)^{3/2} exp(-p^2 L^2 / 2), normalised so that
/// the integral of 4 pi p^2 |psi0|^2 over p >= 0 is one and <p^2> = 3/L^2.
double gaussian_momentum_density(const GaussianCoM& dist, double p);

/// Arbitrary isotropic momentum density for the quadrature path.
/// momentum_scale sets the truncation of the radial integral.
struct RadialDensity
{
  std::function<double(double)> density;
  double momentum_scale = 1.0;
};

enum class Flag : std::uint8_t
{
  CutoffClamped = 1u << 0,
  NearAsymptote = 1u << 1,
  ComptonViolation = 1u << 2,
};

class FlagSet
{
public:
  FlagSet() = default;

  FlagSet& set(Flag flag)
  {
    bits_ |= static_cast<std::uint8_t>(flag);
    return *this;
  }
  bool has(Flag flag) const { return (bits_ & static_cast<std::uint8_t>(flag)) != 0; }
  bool empty() const { return bits_ == 0; }

  /// Semicolon-joined tokens in a fixed order, empty when no flag is set.
  std::string to_string() const;

  friend bool operator==(FlagSet, FlagSet) = default;

private:
  std::uint8_t bits_ = 0;
};

struct RateResult
{
  double value = 0.0;
  double abs_error_estimate = 0.0;
  Scaling scaling = Scaling::Raw;
  FlagSet flags;
};

/// Converts a Raw result into the requested unit convention. The error
/// estimate is transformed with the value. ClassicalUnit needs E > 0.
RateResult apply_scaling(const RateResult& raw, const DetectorParams& params, Scaling scaling);

enum class Violation
{
  ComptonViolation,   ///< L <= 1/(m_g c)
  AbsorptionAsymptote,///< 2E >= m_e c^2, absorption closed forms are non-real
  CutoffConstraint    ///< E/(m_g c^2) >= (K/(m_g c) - 1)^2
};

std::string_view to_string(Violation violation);

struct ValidationReport
{
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation violation) const;
  std::string describe() const;
};

/// Collects every process-dependent constraint the parameters break.
/// For absorption the cutoff defaults to the packet's momentum spread.
/// Never throws; callers decide what to do with the report.
ValidationReport validate_process(const DetectorParams& params, Process process,
                                  const GaussianCoM& dist,
                                  std::optional<double> cutoff = std::nullopt);

} // namespace udwmass
