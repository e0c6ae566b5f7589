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

#include <cstddef>
#include <vector>

namespace udwmass::oracle {

/// Energy mismatch of a first-order process, read off the phase of its
/// amplitude with the time integral taken over all times. p is the initial
/// CoM momentum, k the field quantum, cos_theta the angle between them.
///
///   emission:   |p - k|^2 / 2m_g - p^2 / 2m_e - E + c k
///   absorption: |p + k|^2 / 2m_e - p^2 / 2m_g + E - c k
///
/// For fixed (p, cos_theta) both are quadratics in k.
class Mismatch
{
public:
  struct Quadratic
  {
    double a;  ///< k^2 coefficient, always positive
    double b;  ///< k coefficient
    double c0; ///< constant term
  };

  Mismatch(Process process, const DetectorParams& params);

  double operator()(double p, double k, double cos_theta) const;
  /// d(mismatch)/dk.
  double slope(double p, double k, double cos_theta) const;
  Quadratic in_k(double p, double cos_theta) const;

  Process process() const { return process_; }
  const DetectorParams& params() const { return params_; }

private:
  Process process_;
  DetectorParams params_;
};

double mismatch(Process process, double p, double k, double cos_theta,
                const DetectorParams& params);

/// Energy-conserving field momentum with its golden-rule weight.
struct ResonantRoot
{
  double k;
  double slope; ///< |d(mismatch)/dk| at k
};

/// Non-negative real roots of the mismatch in k at fixed (p, cos_theta),
/// from the sign-aware quadratic formula and polished by bracketed root
/// finding. Throws GrazingRoot when |slope| < 1e-8 c at a root.
std::vector<ResonantRoot> resonant_roots(const Mismatch& delta, double p, double cos_theta);

struct ShapeOutcome
{
  double value = 0.0;
  double abs_error = 0.0;
  /// Quadrature nodes dropped because they sat on a grazing root.
  std::size_t excluded_nodes = 0;
};

/// Golden-rule shape
///   S(p) = integral over cos_theta in [-1, 1] of sum_{k* > 0} k* / (2 |dDelta/dk(k*)|).
/// S(p) is proportional to the template of the same process. Below
/// p = 1e-6 m_g c the p = 0 value is returned, where the integrand does not
/// depend on the angle. The angular integral is split at grazing points
/// (where the two roots merge) and the square-root edge is removed by a
/// quadratic substitution. Throws DomainError when no non-negative root
/// exists at any angle.
ShapeOutcome golden_rule_shape_detail(Process process, double p, const DetectorParams& params,
                                      double rtol = 1e-11);

double golden_rule_shape(Process process, double p, const DetectorParams& params);

/// k-integration grid for the finite-time estimator.
struct KGridSpec
{
  double k_max = 0.0;      ///< 0 selects 5 * (largest resonant k at p), or 5 m_g c without one
  double panel_width = 0.0;///< 0 selects a quarter sinc period at the steepest slope
  double angular_rtol = 1e-10;
};

/**
 * Finite-time transition rate normalised so that its large-t limit is S(p):
 *
 *   (1 / 2 pi t) integral dcos_theta integral_0^k_max dk (k/2) [sin(Delta t/2) / (Delta/2)]^2.
 *
 * The k integral uses fixed 15-point Kronrod panels. Throws ResolutionError
 * when an explicit panel width exceeds pi / (2 t |dDelta/dk|) at a resonant root.
 */
double finite_time_rate(Process process, double p, double t, const DetectorParams& params,
                        const KGridSpec& grid = {});

} // namespace udwmass::oracle
