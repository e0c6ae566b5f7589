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

#include "udwmass/numerics.hpp"

#include "udwmass/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace udwmass::numerics {

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
  0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
  0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
  0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
  0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
  0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
  0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
  0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
  0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kGaussWeights = {
  0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
  0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel
{
  double lo;
  double hi;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod_panel(const RealFunction& f, double lo, double hi)
{
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f_centre = f(centre);
  double kronrod = kKronrodWeights[7] * f_centre;
  double gauss = kGaussWeights[3] * f_centre;
  double abs_sum = std::abs(kronrod);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double fl = f(centre - dx);
    const double fr = f(centre + dx);
    kronrod += kKronrodWeights[i] * (fl + fr);
    abs_sum += kKronrodWeights[i] * (std::abs(fl) + std::abs(fr));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (fl + fr);
  }
  kronrod *= half;
  gauss *= half;
  abs_sum *= std::abs(half);
  const double round_off = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum;
  if (!std::isfinite(kronrod))
    throw QuadratureFailure("integrand is not finite on [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  return {lo, hi, kronrod, std::max(std::abs(kronrod - gauss), round_off)};
}

} // namespace

QuadratureOutcome integrate_radial(const RealFunction& f, double lo, double hi,
                                   const QuadratureOptions& options)
{
  if (!(lo < hi))
    throw ParameterError("integration interval must satisfy lo < hi");

  if (std::isinf(hi)) {
    auto mapped = [&f, lo](double t) {
      const double s = 1.0 - t;
      return f(lo + t / s) / (s * s);
    };
    return integrate_radial(mapped, 0.0, 1.0, options);
  }

  std::priority_queue<Panel> panels;
  panels.push(kronrod_panel(f, lo, hi));
  QuadratureOutcome out;
  out.evaluations = 15;
  double total = panels.top().value;
  double error = panels.top().error;

  auto tolerance = [&options](double value) {
    return std::max(options.atol, options.rtol * std::abs(value));
  };

  while (true) {
    if (error <= tolerance(total)) {
      // Running sums drift; confirm against an exact recount.
      auto copy = panels;
      total = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
      if (error <= tolerance(total)) {
        out.converged = true;
        break;
      }
    }
    if (out.evaluations + 30 > options.max_evaluations) break;

    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break; // panel cannot be split further
    panels.pop();
    const Panel left = kronrod_panel(f, worst.lo, mid);
    const Panel right = kronrod_panel(f, mid, worst.hi);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  out.value = total;
  out.abs_error = error;
  if (!out.converged && options.throw_on_failure)
    throw QuadratureFailure("adaptive quadrature did not reach tolerance: value " +
                            std::to_string(total) + ", error estimate " +
                            std::to_string(error) + " after " +
                            std::to_string(out.evaluations) + " evaluations");
  return out;
}

double integrate_fixed_panels(const RealFunction& f, double lo, double hi, std::size_t panels)
{
  if (panels == 0) return 0.0;
  const double width = (hi - lo) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = lo + width * static_cast<double>(i);
    const double b = (i + 1 == panels) ? hi : a + width;
    sum += kronrod_panel(f, a, b).value;
  }
  return sum;
}

RootOutcome find_root_bracketed(const RealFunction& f, double a, double b, double xtol,
                                double ftol)
{
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0.0};
  if (fb == 0.0) return {b, 0.0, 0.0};
  if ((fa > 0.0) == (fb > 0.0))
    throw NoSignChange("no sign change on [" + std::to_string(a) + ", " + std::to_string(b) +
                       "]");

  // Brent: b is the best estimate, a the previous one, c the contrapoint.
  double c = a;
  double fc = fa;
  double step = b - a;
  double prev_step = step;

  for (int iteration = 0; iteration < 400; ++iteration) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      step = prev_step = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }

    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double half = 0.5 * (c - b);
    const bool narrow = std::abs(half) <= tol;
    if (fb == 0.0 || (narrow && std::abs(fb) <= ftol))
      return {b, fb, std::abs(c - b)};
    const double next_toward_c = std::nextafter(b, c);
    if (next_toward_c == c) return {b, fb, std::abs(c - b)};

    if (std::abs(prev_step) >= tol && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * half * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      else p = -p;
      if (2.0 * p < std::min(3.0 * half * q - std::abs(tol * q), std::abs(prev_step * q))) {
        prev_step = step;
        step = p / q;
      } else {
        step = half;
        prev_step = step;
      }
    } else {
      step = half;
      prev_step = step;
    }

    a = b;
    fa = fb;
    if (std::abs(step) > tol) b += step;
    else if (narrow) b += half; // xtol met but residual too large: bisect
    else b += (half > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return {b, fb, std::abs(c - b)};
}

CoefficientEstimate series_coefficient_estimate(const RealFunction& f, double x0, int order,
                                                double scale, double rel_tolerance,
                                                double abs_floor)
{
  if (order < 0 || order > 2)
    throw UnstableEstimate("series coefficient order must be 0, 1 or 2");
  if (order == 0) return {f(x0), 0.0};
  if (!(scale > 0.0)) throw UnstableEstimate("finite-difference step must be positive");

  const double f0 = (order == 2) ? f(x0) : 0.0;
  auto difference = [&](double h) {
    const double fp = f(x0 + h);
    const double fm = f(x0 - h);
    if (order == 1) return (fp - fm) / (2.0 * h);
    return (fp - 2.0 * f0 + fm) / (2.0 * h * h); // f''/2
  };

  constexpr int kLevels = 12;
  std::array<std::array<double, kLevels>, kLevels> table{};
  double best = 0.0;
  double best_error = std::numeric_limits<double>::infinity();
  double h = scale;
  table[0][0] = difference(h);
  best = table[0][0];
  for (int i = 1; i < kLevels; ++i) {
    h *= 0.5;
    table[i][0] = difference(h);
    double factor = 1.0;
    for (int j = 1; j <= i; ++j) {
      factor *= 4.0;
      table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
      const double err = std::max(std::abs(table[i][j] - table[i][j - 1]),
                                  std::abs(table[i][j] - table[i - 1][j - 1]));
      if (err <= best_error) {
        best_error = err;
        best = table[i][j];
      }
    }
    // Round-off has taken over once the diagonal moves away from the best value.
    if (std::abs(table[i][i] - table[i - 1][i - 1]) >= 2.0 * best_error && i > 2) break;
  }

  if (best_error > rel_tolerance * std::max(std::abs(best), abs_floor))
    throw UnstableEstimate("Richardson levels disagree: estimate " + std::to_string(best) +
                           ", spread " + std::to_string(best_error));
  return {best, best_error};
}

} // namespace udwmass::numerics
