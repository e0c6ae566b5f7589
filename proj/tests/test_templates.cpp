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
#include "udwmass/templates.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace udwmass;

namespace {

// Reference point m_g = 1, E = 0.1, c = 1 (so m_e = 1.1). Values frozen from
// 50-digit evaluations of the closed expressions.
const DetectorParams kReference(1.0, 0.1, 1.0);

TemplateArgs at(double p, const DetectorParams& params = kReference,
                MassConvention convention = MassConvention::SemiRel)
{
  return template_args(params, convention, p);
}

} // namespace

TEST_SUITE("templates")
{
  TEST_CASE("frozen reference values")
  {
    CHECK(template_emission(at(0.0)) == doctest::Approx(0.1742581416494463).epsilon(1e-14));
    CHECK(template_emission(at(0.1)) == doctest::Approx(0.1748382000440185).epsilon(1e-14));
    CHECK(template_emission_expanded(at(0.1)) ==
          doctest::Approx(0.17483444905422866).epsilon(1e-14));
    CHECK(template_absorption(at(0.0)) == doctest::Approx(2.211083193570267).epsilon(1e-14));
    CHECK(template_small_p_limit(Process::Emission, at(0.3)) ==
          doctest::Approx(0.1742581416494463).epsilon(1e-15));
    CHECK(template_small_p_limit(Process::Absorption, at(0.3)) ==
          doctest::Approx(2.211083193570267).epsilon(1e-15));
  }

  TEST_CASE("emission template is exact at rest and smooth just above it")
  {
    const double at_rest = template_emission(at(0.0));
    for (double p : {1e-12, 1e-9, 1e-6}) {
      CAPTURE(p);
      const double value = template_emission(at(p));
      CHECK(std::abs(value - at_rest) <= 0.06 * p * p + 1e-16);
    }
  }

  TEST_CASE("small-momentum expansion: quadratic coefficient and quartic remainder")
  {
    const double curvature =
      (template_emission_expanded(at(1.0)) - template_emission_expanded(at(0.0)));
    CHECK(curvature == doctest::Approx(0.057630740478237175).epsilon(1e-13));

    auto remainder = [](double p) {
      return template_emission(at(p)) - template_emission_expanded(at(p));
    };
    CHECK(remainder(0.01) / std::pow(0.01, 4) ==
          doctest::Approx(0.0372926193119906).epsilon(1e-3));
    // Halving p divides the remainder by 16 up to O(p^2) corrections.
    for (double p : {0.04, 0.02}) {
      CAPTURE(p);
      CHECK(remainder(p) / remainder(p / 2.0) == doctest::Approx(16.0).epsilon(0.01));
    }
  }

  TEST_CASE("absorption expansion agrees to second order")
  {
    auto remainder = [](double p) {
      return template_absorption(at(p)) - template_absorption_expanded(at(p));
    };
    CHECK(std::abs(remainder(0.02) / remainder(0.01)) == doctest::Approx(16.0).epsilon(0.02));
  }

  TEST_CASE("mapping between absorption and emission")
  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
      const double m_g = 0.5 + 2.0 * unit(rng);
      const double c = 0.5 + unit(rng);
      const double E = 0.4 * m_g * c * c * unit(rng);
      TemplateArgs args = at(0.0, DetectorParams(m_g, E, c));
      const auto edge = radicand_boundary(Process::Absorption, args);
      args.p = 0.9 * edge.value_or(1.0) * unit(rng);
      TemplateArgs swapped = args;
      std::swap(swapped.ground_mass, swapped.excited_mass);
      swapped.energy_gap = -E;
      CHECK(template_absorption(args) ==
            doctest::Approx(2.0 - template_emission(swapped)).epsilon(1e-12));
    }
  }

  TEST_CASE("emission template stays within (0, 2) and grows with momentum")
  {
    for (int i = 0; i <= 40; ++i) {
      const double E = 1e-3 + 0.05 * i;
      double previous = 0.0;
      for (int j = 0; j <= 40; ++j) {
        const double p = 0.1 * j;
        for (auto conv :
             {MassConvention::SemiRel, MassConvention::NonRelMg, MassConvention::NonRelMe}) {
          const double value = template_emission(at(p, kReference.with_energy_gap(E), conv));
          CHECK(value > 0.0);
          CHECK(value < 2.0);
        }
        const double semirel = template_emission(at(p, kReference.with_energy_gap(E)));
        CHECK(semirel >= previous);
        previous = semirel;
      }
    }
  }

  TEST_CASE("absorption template is positive inside its domain")
  {
    for (int i = 1; i <= 20; ++i) {
      const double E = 0.02 * i;
      const TemplateArgs base = at(0.0, kReference.with_energy_gap(E));
      const double edge = radicand_boundary(Process::Absorption, base).value();
      for (int j = 0; j < 20; ++j) {
        TemplateArgs args = base;
        args.p = edge * j / 20.0;
        CHECK(template_absorption(args) > 0.0);
      }
      TemplateArgs beyond = base;
      beyond.p = edge * 1.01;
      CHECK_THROWS_AS(template_absorption(beyond), DomainError);
    }
  }

  TEST_CASE("radicand boundaries")
  {
    const TemplateArgs equal = at(0.0, kReference, MassConvention::NonRelMg);
    CHECK(radicand_boundary(Process::Absorption, equal).value() ==
          doctest::Approx(0.5527864045000421).epsilon(1e-14));
    // Emission radicands stay positive for E >= 0.
    CHECK_FALSE(radicand_boundary(Process::Emission, at(0.0)).has_value());
    // The boundary is where the minus radicand vanishes: the template is still finite there.
    TemplateArgs edge = at(0.0);
    edge.p = radicand_boundary(Process::Absorption, edge).value() * (1.0 - 1e-12);
    CHECK(std::isfinite(template_absorption(edge)));
  }

  TEST_CASE("large gaps push emission toward two")
  {
    double previous = 0.0;
    for (double E : {1.0, 1e2, 1e4, 1e6}) {
      const double value = template_emission(at(0.5, kReference.with_energy_gap(E)));
      CHECK(value > previous);
      CHECK(2.0 - value <= 3.0 / std::sqrt(2.0 * E));
      previous = value;
    }
  }

  TEST_CASE("argument validation")
  {
    CHECK_THROWS_AS(template_args(kReference, MassConvention::Classical, 0.0), InvalidConvention);
    TemplateArgs bad = at(-1.0);
    CHECK_THROWS_AS(template_emission(bad), ParameterError);
    CHECK_THROWS_AS(template_small_p_limit(Process::Absorption, at(0.0, DetectorParams(1.0, 2.0))),
                    DomainError);
  }

  TEST_CASE("equal-mass template differs at first order in the gap")
  {
    auto worst_gap = [](double E) {
      double worst = 0.0;
      for (int j = 1; j <= 30; ++j) {
        const double p = 0.01 * j;
        TemplateArgs semirel = at(p, kReference.with_energy_gap(E));
        TemplateArgs equal = semirel;
        equal.excited_mass = equal.ground_mass;
        worst = std::max(worst, std::abs(template_emission(semirel) - template_emission(equal)));
      }
      return worst;
    };
    const double coarse = worst_gap(1e-2);
    const double fine = worst_gap(1e-3);
    CHECK(coarse / 1e-2 < 1.0);
    CHECK(fine / coarse == doctest::Approx(0.1).epsilon(0.05));
  }

  TEST_CASE("large-gap bound at E = 10, 100, 1000")
  {
    for (double E : {10.0, 100.0, 1000.0})
      CHECK(template_emission(at(0.2, kReference.with_energy_gap(E))) > 2.0 - 3.0 / std::sqrt(2.0 * E));
  }

  TEST_CASE("emission vanishes at zero gap for slow packets")
  {
    // Below p = m_g c the exact emission value is zero; allow round-off either side.
    const DetectorParams no_gap(1.0, 0.0);
    for (int j = 0; j <= 30; ++j) {
      const double p = 0.01 * j;
      CHECK(template_emission(at(p, no_gap)) >= -1e-16);
      CHECK(template_absorption(at(p, no_gap)) >= 0.0);
    }
    CHECK(template_emission(at(0.0, no_gap)) == 0.0);
  }
}
