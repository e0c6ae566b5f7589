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

#include "udwmass/oracle.hpp"

#include "udwmass/errors.hpp"
#include "udwmass/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace udwmass::oracle {

namespace {

constexpr double kSmallMomentum = 1e-6; // in units of m_g c
constexpr double kGrazingTolerance = 1e-8; // in units of c

double polish_root(const Mismatch& delta, double p, double cos_theta, double k)
{
  const double step = 1e-9 * std::max(std::abs(k), 1e-300);
  auto f = [&](double x) { return delta(p, x, cos_theta); };
  const double lo = std::max(0.0, k - step);
  const double hi = k + step;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if ((f_lo > 0.0) == (f_hi > 0.0) || f_lo == 0.0 || f_hi == 0.0) return k;
  return numerics::find_root_bracketed(f, lo, hi, 0.0, 0.0).root;
}

// Sum over non-negative resonant roots of k / (2 |slope|); `found` reports
// whether any such root exists.
double root_sum(const Mismatch& delta, double p, double cos_theta, bool& found)
{
  const auto roots = resonant_roots(delta, p, cos_theta);
  found = !roots.empty();
  double sum = 0.0;
  for (const auto& root : roots) sum += root.k / (2.0 * root.slope);
  return sum;
}

// Angles in (-1, 1) where the two roots merge: b(u)^2 = 4 a c0.
std::vector<double> grazing_angles(const Mismatch& delta, double p)
{
  const auto q0 = delta.in_k(p, 0.0);
  const auto q1 = delta.in_k(p, 1.0);
  const double b0 = q0.b;
  const double b1 = q1.b - q0.b;
  const double product = 4.0 * q0.a * q0.c0;
  std::vector<double> out;
  if (product < 0.0 || b1 == 0.0) return out;

  auto discriminant = [&](double u) {
    const double b = b0 + b1 * u;
    return b * b - product;
  };
  const double root = std::sqrt(product);
  for (double target : {root, -root}) {
    double u = (target - b0) / b1;
    if (!(u > -1.0 && u < 1.0)) continue;
    const double width = 1e-9;
    const double lo = std::max(-1.0, u - width);
    const double hi = std::min(1.0, u + width);
    const double d_lo = discriminant(lo);
    const double d_hi = discriminant(hi);
    if ((d_lo > 0.0) != (d_hi > 0.0) && d_lo != 0.0 && d_hi != 0.0)
      u = numerics::find_root_bracketed(discriminant, lo, hi, 0.0, 0.0).root;
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

Mismatch::Mismatch(Process process, const DetectorParams& params)
  : process_(process), params_(params)
{
}

Mismatch::Quadratic Mismatch::in_k(double p, double cos_theta) const
{
  const double m_g = params_.ground_mass();
  const double m_e = params_.excited_mass();
  const double c = params_.speed_of_light();
  const double E = params_.energy_gap();
  const double kinetic_shift = 0.5 * p * p * (1.0 / m_g - 1.0 / m_e);
  if (process_ == Process::Emission)
    return {0.5 / m_g, c - p * cos_theta / m_g, kinetic_shift - E};
  return {0.5 / m_e, p * cos_theta / m_e - c, E - kinetic_shift};
}

double Mismatch::operator()(double p, double k, double cos_theta) const
{
  const auto q = in_k(p, cos_theta);
  return (q.a * k + q.b) * k + q.c0;
}

double Mismatch::slope(double p, double k, double cos_theta) const
{
  const auto q = in_k(p, cos_theta);
  return 2.0 * q.a * k + q.b;
}

double mismatch(Process process, double p, double k, double cos_theta,
                const DetectorParams& params)
{
  return Mismatch(process, params)(p, k, cos_theta);
}

std::vector<ResonantRoot> resonant_roots(const Mismatch& delta, double p, double cos_theta)
{
  const auto q = delta.in_k(p, cos_theta);
  const double disc = q.b * q.b - 4.0 * q.a * q.c0;
  std::vector<ResonantRoot> out;
  if (disc < 0.0) return out;

  const double root_disc = std::sqrt(disc);
  const double grazing = kGrazingTolerance * delta.params().speed_of_light();
  const double w = -0.5 * (q.b + std::copysign(root_disc, q.b));
  double candidates[2] = {w / q.a, w != 0.0 ? q.c0 / w : 0.0};
  const int count = (w != 0.0) ? 2 : 1;
  for (int i = 0; i < count; ++i) {
    if (!(candidates[i] >= 0.0)) continue;
    if (root_disc < grazing)
      throw GrazingRoot("resonant root at k = " + std::to_string(candidates[i]) +
                        " is tangential (|dDelta/dk| = " + std::to_string(root_disc) + ")");
    const double k = polish_root(delta, p, cos_theta, candidates[i]);
    out.push_back({k, root_disc});
  }
  return out;
}

ShapeOutcome golden_rule_shape_detail(Process process, double p, const DetectorParams& params,
                                      double rtol)
{
  if (!(p >= 0.0)) throw ParameterError("initial momentum must be non-negative");
  const Mismatch delta(process, params);
  const double mc = params.ground_mass() * params.speed_of_light();

  ShapeOutcome out;
  if (p < kSmallMomentum * mc) {
    bool found = false;
    out.value = 2.0 * root_sum(delta, 0.0, 0.0, found);
    if (!found) throw DomainError("process is kinematically forbidden at p = 0");
    return out;
  }

  bool any_root = false;
  auto g = [&](double u) {
    bool found = false;
    double value = 0.0;
    try {
      value = root_sum(delta, p, u, found);
    } catch (const GrazingRoot&) {
      ++out.excluded_nodes;
      return 0.0;
    }
    any_root = any_root || found;
    return value;
  };

  numerics::QuadratureOptions options;
  options.rtol = rtol;
  options.atol = 1e-15 * mc;

  std::vector<double> breaks{-1.0};
  const auto grazing = grazing_angles(delta, p);
  breaks.insert(breaks.end(), grazing.begin(), grazing.end());
  breaks.push_back(1.0);

  auto is_grazing = [&grazing](double u) {
    return std::find(grazing.begin(), grazing.end(), u) != grazing.end();
  };
  auto accumulate = [&out](const numerics::QuadratureOutcome& part) {
    out.value += part.value;
    out.abs_error += part.abs_error;
  };
  // Integral of g over [from, to] with a square-root edge at `edge`.
  auto edge_integral = [&](double edge, double other) {
    const double direction = other > edge ? 1.0 : -1.0;
    auto mapped = [&](double s) { return 2.0 * s * g(edge + direction * s * s); };
    accumulate(numerics::integrate_radial(mapped, 0.0, std::sqrt(std::abs(other - edge)),
                                          options));
  };

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i];
    const double hi = breaks[i + 1];
    const bool graze_lo = is_grazing(lo);
    const bool graze_hi = is_grazing(hi);
    if (graze_lo && graze_hi) {
      const double mid = 0.5 * (lo + hi);
      edge_integral(lo, mid);
      edge_integral(hi, mid);
    } else if (graze_lo) {
      edge_integral(lo, hi);
    } else if (graze_hi) {
      edge_integral(hi, lo);
    } else {
      accumulate(numerics::integrate_radial(g, lo, hi, options));
    }
  }

  if (!any_root) throw DomainError("process is kinematically forbidden at every angle");
  return out;
}

double golden_rule_shape(Process process, double p, const DetectorParams& params)
{
  return golden_rule_shape_detail(process, p, params).value;
}

double finite_time_rate(Process process, double p, double t, const DetectorParams& params,
                        const KGridSpec& grid)
{
  if (!(t > 0.0)) throw ParameterError("interaction time must be positive");
  if (!(p >= 0.0)) throw ParameterError("initial momentum must be non-negative");
  const Mismatch delta(process, params);

  double k_max = grid.k_max;
  if (!(k_max > 0.0)) {
    double reference = 0.0;
    for (double u : {-1.0, 1.0})
      for (const auto& root : resonant_roots(delta, p, u)) reference = std::max(reference, root.k);
    // Only the k = 0 root: fall back to the detector's own momentum scale.
    if (reference == 0.0)
      reference = std::max({params.energy_gap() / params.speed_of_light(), p,
                            params.ground_mass() * params.speed_of_light()});
    k_max = 5.0 * reference;
  }

  const double half_period = std::numbers::pi / (2.0 * t); // divided by |slope| below
  double width = grid.panel_width;
  if (width > 0.0) {
    for (double u : {-1.0, 0.0, 1.0})
      for (const auto& root : resonant_roots(delta, p, u))
        if (width > half_period / root.slope)
          throw ResolutionError("k panel width " + std::to_string(width) +
                                " exceeds pi/(2 t |dDelta/dk|) = " +
                                std::to_string(half_period / root.slope));
  } else {
    double steepest = 0.0;
    for (double u : {-1.0, 1.0}) {
      const auto q = delta.in_k(p, u);
      steepest = std::max({steepest, std::abs(q.b), std::abs(2.0 * q.a * k_max + q.b)});
    }
    width = half_period / std::max(steepest, 1e-300);
  }
  const auto panels = static_cast<std::size_t>(std::ceil(k_max / width));

  auto kernel = [t](double mismatch_value) {
    const double x = 0.5 * mismatch_value * t;
    if (std::abs(x) < 1e-4) return t * t * (1.0 - x * x / 3.0);
    const double s = std::sin(x) / (0.5 * mismatch_value);
    return s * s;
  };
  auto angular = [&](double u) {
    const auto q = delta.in_k(p, u);
    auto integrand = [&](double k) { return 0.5 * k * kernel((q.a * k + q.b) * k + q.c0); };
    return numerics::integrate_fixed_panels(integrand, 0.0, k_max, panels);
  };

  numerics::QuadratureOptions options;
  options.rtol = grid.angular_rtol;
  options.atol = 0.0;
  options.throw_on_failure = false;
  options.max_evaluations = 20'000;
  const auto outer = numerics::integrate_radial(angular, -1.0, 1.0, options);
  return outer.value / (2.0 * std::numbers::pi * t);
}

} // namespace udwmass::oracle
