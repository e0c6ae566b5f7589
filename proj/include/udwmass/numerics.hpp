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

#include <cstddef>
#include <functional>

namespace udwmass::numerics {

using RealFunction = std::function<double(double)>;

struct QuadratureOutcome
{
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions
{
  double rtol = 1e-9;
  double atol = 1e-12;
  std::size_t max_evaluations = 1'000'000;
  /// When false an unconverged outcome is returned instead of throwing.
  bool throw_on_failure = true;
};

/**
 * Globally adaptive 15-point Gauss-Kronrod quadrature of f over [lo, hi].
 *
 * Nodes never touch the panel endpoints, so f may be non-evaluable at lo
 * as long as the integral exists. An infinite hi is mapped onto [0, 1)
 * with x = lo + t / (1 - t). The per-panel error is |K15 - G7| with a
 * round-off floor, which overestimates the true error of K15 on smooth
 * integrands.
 *
 * Throws QuadratureFailure when the evaluation budget runs out before
 * abs_error <= max(atol, rtol |value|), unless throw_on_failure is off.
 */
QuadratureOutcome integrate_radial(const RealFunction& f, double lo, double hi,
                                   const QuadratureOptions& options = {});

/// Non-adaptive composite K15 rule on `panels` equal panels.
double integrate_fixed_panels(const RealFunction& f, double lo, double hi, std::size_t panels);

struct RootOutcome
{
  double root = 0.0;
  double residual = 0.0;
  double bracket_width = 0.0;
};

/// Brent's method on a sign-changing bracket. Stops once the bracket is
/// narrower than xtol and |f(root)| <= ftol, or when the bracket cannot
/// shrink any further in double precision. Throws NoSignChange when
/// f(a) and f(b) have the same strict sign.
RootOutcome find_root_bracketed(const RealFunction& f, double a, double b, double xtol = 1e-14,
                                double ftol = 1e-14);

struct CoefficientEstimate
{
  double value = 0.0;
  double uncertainty = 0.0;
};

/// Taylor coefficient f^(order)(x0) / order! for order in {0, 1, 2},
/// from central differences with step `scale`, refined by Richardson
/// extrapolation over successive step halvings. The uncertainty is the
/// spread of the last accepted extrapolation level. Throws UnstableEstimate
/// if that spread exceeds rel_tolerance * max(|value|, abs_floor).
CoefficientEstimate series_coefficient_estimate(const RealFunction& f, double x0, int order,
                                                double scale, double rel_tolerance = 1e-6,
                                                double abs_floor = 1e-300);

} // namespace udwmass::numerics
