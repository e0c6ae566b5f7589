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


#include "udwmass/errors.hpp"
#include "udwmass/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

using namespace udwmass;
using namespace udwmass::numerics;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct KnownIntegral
{
  std::string name;
  RealFunction f;
  double lo;
  double hi;
  double exact;
};

std::vector<KnownIntegral> known_integrals()
{
  return {
    {"x^2 on [0,1]", [](double x) { return x * x; }, 0.0, 1.0, 1.0 / 3.0},
    {"x^7 on [-1,2]", [](double x) { return std::pow(x, 7); }, -1.0, 2.0, (256.0 - 1.0) / 8.0},
    {"sin on [0,pi]", [](double x) { return std::sin(x); }, 0.0, kPi, 2.0},
    {"cos^2 on [0,pi]", [](double x) { return std::cos(x) * std::cos(x); }, 0.0, kPi, kPi / 2.0},
    {"exp on [0,1]", [](double x) { return std::exp(x); }, 0.0, 1.0, std::exp(1.0) - 1.0},
    {"1/(1+x^2) on [0,1]", [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, kPi / 4.0},
    {"1/(1+x^2) on [0,inf)", [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, kInf, kPi / 2.0},
    {"exp(-x) on [0,inf)", [](double x) { return std::exp(-x); }, 0.0, kInf, 1.0},
    {"x^2 exp(-x^2) on [0,inf)", [](double x) { return x * x * std::exp(-x * x); }, 0.0, kInf,
     std::sqrt(kPi) / 4.0},
    {"exp(-x^2/2) on [0,inf)", [](double x) { return std::exp(-0.5 * x * x); }, 0.0, kInf,
     std::sqrt(kPi / 2.0)},
    {"sqrt on [0,1]", [](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
    {"1/sqrt on [0,1]", [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 2.0},
    {"log on [0,1]", [](double x) { return std::log(x); }, 0.0, 1.0, -1.0},
    {"sqrt(1-x^2) on [-1,1]", [](double x) { return std::sqrt(1.0 - x * x); }, -1.0, 1.0,
     kPi / 2.0},
    {"|x - 1/3| on [0,1]", [](double x) { return std::abs(x - 1.0 / 3.0); }, 0.0, 1.0, 5.0 / 18.0},
    {"1/(1+25x^2) on [-1,1]", [](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, -1.0, 1.0,
     0.4 * std::atan(5.0)},
    {"x exp(-x) on [0,inf)", [](double x) { return x * std::exp(-x); }, 0.0, kInf, 1.0},
    {"1/x^2 on [1,inf)", [](double x) { return 1.0 / (x * x); }, 1.0, kInf, 1.0},
    {"sin^2(10x) on [0,pi]", [](double x) { return std::pow(std::sin(10.0 * x), 2); }, 0.0, kPi,
     kPi / 2.0},
    {"exp(-100(x-1/2)^2) on [0,1]", [](double x) { return std::exp(-100.0 * (x - 0.5) * (x - 0.5)); },
     0.0, 1.0, std::sqrt(kPi) / 10.0 * std::erf(5.0)},
    {"x^4 exp(-x^2/2) on [0,inf)", [](double x) { return std::pow(x, 4) * std::exp(-0.5 * x * x); },
     0.0, kInf, 3.0 * std::sqrt(kPi / 2.0)},
    {"1/(1+x)^3 on [0,inf)", [](double x) { return std::pow(1.0 + x, -3); }, 0.0, kInf, 0.5},
    {"log(1+x) on [0,1]", [](double x) { return std::log1p(x); }, 0.0, 1.0,
     2.0 * std::log(2.0) - 1.0},
  };
}

} // namespace

TEST_SUITE("numerics")
{
  TEST_CASE("adaptive quadrature reproduces known integrals with honest error bars")
  {
    for (const auto& item : known_integrals()) {
      CAPTURE(item.name);
      QuadratureOptions options;
      options.rtol = 1e-10;
      options.atol = 0.0;
      const auto result = integrate_radial(item.f, item.lo, item.hi, options);
      CHECK(result.converged);
      const double true_error = std::abs(result.value - item.exact);
      CHECK(true_error <= 1e-9 * std::abs(item.exact));
      // Conservative: the reported bound covers the true error (up to round-off).
      CHECK(true_error <= result.abs_error + 8.0 * std::numeric_limits<double>::epsilon() *
                                               std::abs(item.exact));
    }
  }

  TEST_CASE("quadrature rejects empty or reversed intervals")
  {
    auto f = [](double x) { return std::exp(x); };
    CHECK_THROWS_AS(integrate_radial(f, 1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(integrate_radial(f, 0.5, 0.5), ParameterError);
    CHECK(integrate_radial([](double) { return 1.0; }, 0.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("exhausted evaluation budget is reported")
  {
    QuadratureOptions options;
    options.rtol = 1e-14;
    options.atol = 0.0;
    options.max_evaluations = 60;
    auto f = [](double x) { return std::sin(50.0 * x) / (x + 1e-3); };
    CHECK_THROWS_AS(integrate_radial(f, 0.0, 3.0, options), QuadratureFailure);
    options.throw_on_failure = false;
    const auto result = integrate_radial(f, 0.0, 3.0, options);
    CHECK_FALSE(result.converged);
    CHECK(result.evaluations <= 60 + 30);
  }

  TEST_CASE("fixed panels integrate polynomials exactly")
  {
    auto p = [](double x) { return 3.0 * std::pow(x, 9) - x * x + 1.0; };
    const double exact = 0.3 * (1024.0 - 1.0) - (8.0 - 1.0) / 3.0 + 1.0;
    CHECK(integrate_fixed_panels(p, 1.0, 2.0, 1) == doctest::Approx(exact).epsilon(1e-14));
    CHECK(integrate_fixed_panels([](double x) { return std::cos(x); }, 0.0, kPi / 2.0, 8) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("bracketed root finding meets the residual tolerance")
  {
    struct Case
    {
      RealFunction f;
      double a, b, root;
    };
    const std::vector<Case> cases{
      {[](double x) { return x * x - 2.0; }, 0.0, 2.0, std::sqrt(2.0)},
      {[](double x) { return std::cos(x) - x; }, 0.0, 1.0, 0.7390851332151607},
      {[](double x) { return std::exp(x) - 10.0; }, 0.0, 5.0, std::log(10.0)},
      {[](double x) { return std::pow(x - 1.0, 3); }, 0.0, 3.0, 1.0},
      {[](double x) { return std::tanh(50.0 * (x - 0.3)); }, -1.0, 1.0, 0.3},
    };
    for (const auto& c : cases) {
      const auto out = find_root_bracketed(c.f, c.a, c.b);
      CHECK(std::abs(out.residual) <= 1e-14);
      CHECK(out.residual == c.f(out.root));
      CHECK(out.root == doctest::Approx(c.root).epsilon(1e-5));
    }
    const auto simple = find_root_bracketed([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(std::abs(simple.root - std::sqrt(2.0)) <= 1e-14);
    CHECK(simple.bracket_width <= 1e-14);
  }

  TEST_CASE("root finding accepts endpoint roots and rejects missing sign changes")
  {
    CHECK(find_root_bracketed([](double x) { return x; }, 0.0, 1.0).root == 0.0);
    CHECK_THROWS_AS(find_root_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    NoSignChange);
  }

  TEST_CASE("series coefficients of polynomials are exact")
  {
    auto cubic = [](double x) { return 2.0 + 3.0 * x - 5.0 * x * x + 7.0 * x * x * x; };
    CHECK(series_coefficient_estimate(cubic, 0.0, 0, 0.1).value == 2.0);
    CHECK(series_coefficient_estimate(cubic, 0.0, 1, 0.1).value ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(series_coefficient_estimate(cubic, 0.0, 2, 0.1).value ==
          doctest::Approx(-5.0).epsilon(1e-12));
    // Expansion about x0 = 1: f'(1) = 3 - 10 + 21, f''(1)/2 = -5 + 21.
    CHECK(series_coefficient_estimate(cubic, 1.0, 1, 0.1).value ==
          doctest::Approx(14.0).epsilon(1e-12));
    CHECK(series_coefficient_estimate(cubic, 1.0, 2, 0.1).value ==
          doctest::Approx(16.0).epsilon(1e-12));
  }

  TEST_CASE("series coefficients of smooth functions")
  {
    const auto est = series_coefficient_estimate([](double x) { return std::exp(x); }, 0.0, 2, 0.5);
    CHECK(est.value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(est.uncertainty < 1e-8);
    CHECK(series_coefficient_estimate([](double x) { return std::sin(x); }, 0.0, 1, 0.5).value ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(series_coefficient_estimate([](double x) { return x; }, 0.0, 3, 0.1),
                    UnstableEstimate);
    // A step has no derivative: the differences grow like 1/h.
    CHECK_THROWS_AS(series_coefficient_estimate([](double x) { return x > 0.0 ? 1.0 : 0.0; }, 0.0,
                                                1, 1e-3),
                    UnstableEstimate);
  }

  TEST_CASE("series coefficients of a quartic")
  {
    auto quartic = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x + 4.0 * std::pow(x, 3) - 3.0 * std::pow(x, 4); };
    CHECK(series_coefficient_estimate(quartic, 0.0, 1, 0.2).value == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(series_coefficient_estimate(quartic, 0.0, 2, 0.2).value == doctest::Approx(0.5).epsilon(1e-12));
    // About x0 = -1: f'(-1) = -2 - 1 + 12 + 12, f''(-1)/2 = 0.5 - 12 - 18.
    CHECK(series_coefficient_estimate(quartic, -1.0, 1, 0.2).value == doctest::Approx(21.0).epsilon(1e-12));
    CHECK(series_coefficient_estimate(quartic, -1.0, 2, 0.2).value == doctest::Approx(-29.5).epsilon(1e-12));
  }
}
