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

#include "udwmass/verify.hpp"

#include "udwmass/errors.hpp"
#include "udwmass/oracle.hpp"
#include "udwmass/rates.hpp"
#include "udwmass/templates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace udwmass::verify {

namespace {

Check at_most(std::string description, double measured, double tolerance)
{
  return {std::move(description), measured, tolerance, measured <= tolerance};
}

double relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

bool SuiteReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

SuiteReport identity_suite()
{
  SuiteReport report{"identity", {}};

  // Absorption template vs 2 - emission template with swapped masses and -E.
  const double m_g = 1.0;
  const double c = 1.0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double E = 0.4 * (i + 0.5) / 50.0;
    const DetectorParams params(m_g, E, c);
    TemplateArgs args = template_args(params, MassConvention::SemiRel, 0.0);
    const double edge = radicand_boundary(Process::Absorption, args).value_or(0.3);
    for (int j = 0; j < 50; ++j) {
      args.p = std::min(0.3, edge) * (j + 0.5) / 50.0;
      TemplateArgs swapped = args;
      std::swap(swapped.ground_mass, swapped.excited_mass);
      swapped.energy_gap = -args.energy_gap;
      worst = std::max(worst, std::abs(template_absorption(args) -
                                       (2.0 - template_emission(swapped))));
    }
  }
  report.checks.push_back(at_most("mapping identity, max |deviation| on 50x50 (p, E)", worst, 1e-12));

  std::mt19937_64 rng(20260419);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_em = 0.0;
  double worst_abs = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double M = std::exp(std::log(0.1) + unit(rng) * std::log(1e3));
    const double cc = 0.5 + 1.5 * unit(rng);
    const double E = 0.45 * M * cc * cc * unit(rng);
    const double L = (1.0 + 99.0 * unit(rng)) / (M * cc);
    const double lambda = 0.1 + 2.0 * unit(rng);
    worst_em = std::max(worst_em, relative(closed_form::emission_semirel(M, M, E, cc, lambda, L),
                                           closed_form::emission_nonrel(M, E, cc, lambda, L)));
    worst_abs = std::max(worst_abs,
                         relative(closed_form::absorption_semirel(M, M, E, cc, lambda, L),
                                  closed_form::absorption_nonrel(M, E, cc, lambda, L)));
  }
  report.checks.push_back(at_most("equal-mass reduction, emission (relative)", worst_em, 1e-14));
  report.checks.push_back(at_most("equal-mass reduction, absorption (relative)", worst_abs, 1e-14));
  return report;
}

SuiteReport oracle_suite()
{
  SuiteReport report{"oracle", {}};
  const DetectorParams params(1.0, 0.1, 1.0);
  for (auto process : {Process::Emission, Process::Absorption}) {
    const TemplateArgs base = template_args(params, MassConvention::SemiRel, 0.0);
    const double edge = radicand_boundary(process, base).value_or(1e300);
    const double top = std::min(0.3, edge);
    double lo = 1e300;
    double hi = -1e300;
    for (int i = 1; i <= 8; ++i) {
      TemplateArgs args = base;
      args.p = top * i / 8.5;
      const double T = process == Process::Emission ? template_emission(args)
                                                    : template_absorption(args);
      const double ratio = oracle::golden_rule_shape(process, args.p, params) / T;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const std::string name(to_string(process));
    report.checks.push_back(at_most(name + " S(p)/T(p) relative spread over 8 momenta",
                                    (hi - lo) / std::abs(hi), 1e-3));
  }
  const double small_p = oracle::golden_rule_shape(Process::Emission, 0.0, params) /
                         template_small_p_limit(Process::Emission,
                                                template_args(params, MassConvention::SemiRel, 0.0));
  report.checks.push_back(at_most("emission p->0 ratio vs m_g/2", std::abs(small_p - 0.5), 1e-6));
  return report;
}

SuiteReport quadrature_suite()
{
  SuiteReport report{"quadrature", {}};
  const DetectorParams params(1.0, 0.1, 1.0);

  RateRequest request{params};
  request.method = Method::Quadrature;
  request.template_kind = TemplateKind::Expanded;
  request.quadrature.rtol = 1e-13;
  request.quadrature.atol = 0.0;
  request.dist = GaussianCoM(10.0);
  const double expanded = rate_quadrature(request).value;
  const double closed =
    rate_emission_closed(params, GaussianCoM(10.0), MassConvention::SemiRel).value;
  report.checks.push_back(
    at_most("expanded-template quadrature vs closed form (relative)", relative(expanded, closed), 1e-12));

  request.template_kind = TemplateKind::Exact;
  double residual[3];
  const double spreads[3] = {0.1, 0.05, 0.025};
  for (int i = 0; i < 3; ++i) {
    const GaussianCoM dist = GaussianCoM::from_momentum_spread(spreads[i]);
    request.dist = dist;
    residual[i] = rate_quadrature(request).value -
                  rate_emission_closed(params, dist, MassConvention::SemiRel).value;
  }
  for (int i = 0; i < 2; ++i) {
    const double ratio = residual[i] / residual[i + 1];
    char label[96];
    std::snprintf(label, sizeof label, "residual ratio L_p %.3g -> %.3g, |ratio/16 - 1|",
                  spreads[i], spreads[i + 1]);
    report.checks.push_back(at_most(label, std::abs(ratio / 16.0 - 1.0), 0.2));
  }
  return report;
}

SuiteReport limits_suite()
{
  SuiteReport report{"limits", {}};
  const DetectorParams params(1.0, 1.0, 1.0);
  const GaussianCoM dist(1.0);
  const auto sequence = rate_infinite_mass_limit_check(params, dist, {1e2, 1e3, 1e4});
  double previous = 1e300;
  bool monotone = true;
  double last = 0.0;
  for (const auto& raw : sequence) {
    const double gap = std::abs(apply_scaling(raw, params, Scaling::ClassicalUnit).value - 1.0);
    monotone = monotone && gap < previous;
    previous = gap;
    last = gap;
  }
  report.checks.push_back({"classical-limit sequence m_g/E = 1e2, 1e3, 1e4 is monotone",
                           monotone ? 0.0 : 1.0, 0.0, monotone});
  report.checks.push_back(at_most("|scaled semirel rate - 1| at m_g/E = 1e4", last, 1e-2));

  bool above = true;
  double worst = 0.0;
  for (double ratio : {10.0, 100.0, 1000.0}) {
    TemplateArgs args = template_args(DetectorParams(1.0, ratio), MassConvention::SemiRel, 0.1);
    const double value = template_emission(args);
    above = above && value > 2.0 - 3.0 / std::sqrt(2.0 * ratio) && value < 2.0;
    worst = std::max(worst, 2.0 - value);
  }
  report.checks.push_back({"large-gap emission template within 3/sqrt(2E/m_g c^2) of 2", worst,
                           3.0 / std::sqrt(20.0), above});
  return report;
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"identity", "oracle", "quadrature", "limits"};
  return names;
}

std::vector<SuiteReport> run_suites(std::string_view selector)
{
  std::vector<SuiteReport> out;
  const bool all = selector == "all";
  if (all || selector == "identity") out.push_back(identity_suite());
  if (all || selector == "oracle") out.push_back(oracle_suite());
  if (all || selector == "quadrature") out.push_back(quadrature_suite());
  if (all || selector == "limits") out.push_back(limits_suite());
  if (out.empty()) throw ParameterError("unknown verification suite '" + std::string(selector) + "'");
  return out;
}

void print_report(std::ostream& out, const SuiteReport& report)
{
  out << "[" << (report.passed() ? "PASS" : "FAIL") << "] suite " << report.name << '\n';
  for (const auto& check : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "  %s  %-62s measured %.3e  tolerance %.3e\n",
                  check.passed ? "ok  " : "FAIL", check.description.c_str(), check.measured,
                  check.tolerance);
    out << line;
  }
}

} // namespace udwmass::verify
