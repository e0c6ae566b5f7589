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
#include "udwmass/model.hpp"
#include "udwmass/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace udwmass;

TEST_SUITE("model")
{
  TEST_CASE("excited mass adds the gap over c squared")
  {
    const DetectorParams params(1.0, 0.1, 2.0, 0.5);
    CHECK(params.excited_mass() == doctest::Approx(1.025).epsilon(1e-15));
    CHECK(derived_excited_mass(params) == params.excited_mass());
    CHECK(nonrelativistic_mass(params, MassConvention::NonRelMg) == 1.0);
    CHECK(nonrelativistic_mass(params, MassConvention::NonRelMe) == params.excited_mass());
    CHECK_THROWS_AS(nonrelativistic_mass(params, MassConvention::SemiRel), InvalidConvention);
    CHECK_THROWS_AS(nonrelativistic_mass(params, MassConvention::Classical), InvalidConvention);
  }

  TEST_CASE("zero gap gives equal masses")
  {
    const DetectorParams params(3.0, 0.0);
    CHECK(params.excited_mass() == params.ground_mass());
  }

  TEST_CASE("invalid parameters are rejected")
  {
    CHECK_THROWS_AS(DetectorParams(0.0, 0.1), ParameterError);
    CHECK_THROWS_AS(DetectorParams(-1.0, 0.1), ParameterError);
    CHECK_THROWS_AS(DetectorParams(1.0, -0.1), ParameterError);
    CHECK_THROWS_AS(DetectorParams(1.0, 0.1, 0.0), ParameterError);
    CHECK_THROWS_AS(DetectorParams(1.0, 0.1, 1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(DetectorParams(NAN, 0.1), ParameterError);
    CHECK_THROWS_AS(DetectorParams(1.0, INFINITY), ParameterError);
    CHECK_THROWS_AS(GaussianCoM(0.0), ParameterError);
    CHECK_THROWS_AS(GaussianCoM::from_momentum_spread(-1.0), ParameterError);
  }

  TEST_CASE("with_* copies change one field")
  {
    const DetectorParams base(1.0, 0.1, 1.5, 0.3);
    const auto heavier = base.with_ground_mass(7.0);
    CHECK(heavier.ground_mass() == 7.0);
    CHECK(heavier.energy_gap() == 0.1);
    CHECK(heavier.speed_of_light() == 1.5);
    CHECK(heavier.coupling() == 0.3);
    CHECK(base.with_energy_gap(0.2).energy_gap() == 0.2);
    CHECK(base.with_coupling(2.0).coupling() == 2.0);
  }

  TEST_CASE("parsing round-trips through to_string")
  {
    for (auto p : {Process::Emission, Process::Absorption})
      CHECK(parse_process(to_string(p)) == p);
    for (auto m : {MassConvention::SemiRel, MassConvention::NonRelMg, MassConvention::NonRelMe,
                   MassConvention::Classical})
      CHECK(parse_convention(to_string(m)) == m);
    for (auto s : {Scaling::Raw, Scaling::ClassicalUnit, Scaling::ComptonUnit})
      CHECK(parse_scaling(to_string(s)) == s);
    CHECK(parse_convention("nonrel") == MassConvention::NonRelMg);
    CHECK_THROWS_AS(parse_process("scattering"), ParameterError);
    CHECK_THROWS_AS(parse_convention("relativistic"), ParameterError);
    CHECK_THROWS_AS(parse_scaling("si"), ParameterError);
  }

  TEST_CASE("Gaussian density is normalised radially")
  {
    const GaussianCoM dist(2.5);
    CHECK(dist.momentum_spread() == doctest::Approx(0.4));
    CHECK(GaussianCoM::from_momentum_spread(0.4).width() == doctest::Approx(2.5));
    // Trapezoid on a fine grid; the integrand is smooth and decays fast.
    const double h = 1e-3;
    double sum = 0.0;
    for (int i = 1; i < 20000; ++i) {
      const double p = i * h;
      sum += 4.0 * std::numbers::pi * p * p * gaussian_momentum_density(dist, p);
    }
    CHECK(sum * h == doctest::Approx(1.0).epsilon(1e-10));
    // (L^2 / 2pi)^{3/2} at p = 0 for L = 1.
    CHECK(gaussian_momentum_density(GaussianCoM(1.0), 0.0) ==
          doctest::Approx(0.06349363593424097).epsilon(1e-15));
  }

  TEST_CASE("flag set formatting is ordered and stable")
  {
    FlagSet flags;
    CHECK(flags.empty());
    CHECK(flags.to_string().empty());
    flags.set(Flag::ComptonViolation).set(Flag::CutoffClamped);
    CHECK(flags.has(Flag::CutoffClamped));
    CHECK_FALSE(flags.has(Flag::NearAsymptote));
    CHECK(flags.to_string() == "CutoffClamped;ComptonViolation");
  }

  TEST_CASE("scalings")
  {
    const DetectorParams params(2.0, 0.5, 3.0, 0.7);
    RateResult raw;
    raw.value = 1.0;
    raw.abs_error_estimate = 0.1;
    const auto classical = apply_scaling(raw, params, Scaling::ClassicalUnit);
    CHECK(classical.value == doctest::Approx(2.0 * std::numbers::pi / (0.49 * 0.5)));
    CHECK(classical.abs_error_estimate == doctest::Approx(0.1 * classical.value));
    CHECK(classical.scaling == Scaling::ClassicalUnit);
    CHECK(apply_scaling(raw, params, Scaling::ComptonUnit).value == doctest::Approx(1.0 / 18.0));
    CHECK(apply_scaling(raw, params, Scaling::Raw).value == 1.0);
    CHECK_THROWS_AS(apply_scaling(raw, params.with_energy_gap(0.0), Scaling::ClassicalUnit),
                    DomainError);
  }

  TEST_CASE("validation reports each violated constraint")
  {
    const DetectorParams params(1.0, 0.1);
    CHECK(validate_process(params, Process::Emission, GaussianCoM(10.0)).ok());
    CHECK(validate_process(params, Process::Absorption, GaussianCoM(10.0)).ok());

    const auto compton = validate_process(params, Process::Emission, GaussianCoM(1.0));
    CHECK(compton.has(Violation::ComptonViolation));
    CHECK(compton.describe().find("Compton") != std::string::npos);

    const auto asymptote = validate_process(DetectorParams(1.0, 2.0), Process::Absorption,
                                            GaussianCoM(10.0));
    CHECK(asymptote.has(Violation::AbsorptionAsymptote));

    // K = 0.8: (K - 1)^2 = 0.04 < 0.1.
    const auto cutoff = validate_process(params, Process::Absorption, GaussianCoM(10.0), 0.8);
    CHECK(cutoff.has(Violation::CutoffConstraint));
    CHECK_FALSE(cutoff.has(Violation::ComptonViolation));
    // Emission ignores the cutoff.
    CHECK(validate_process(params, Process::Emission, GaussianCoM(10.0), 0.8).ok());
  }

  TEST_CASE("excited mass: monotone in E, invariant under E -> sE, c -> sqrt(s) c")
  {
    double previous = 0.0;
    for (double E : {0.0, 1e-3, 0.1, 1.0, 50.0}) {
      const double m_e = DetectorParams(2.0, E, 1.3).excited_mass();
      CHECK(m_e > previous);
      previous = m_e;
      for (double s : {0.25, 3.0, 1e4}) {
        CHECK(DetectorParams(2.0, s * E, 1.3 * std::sqrt(s)).excited_mass() ==
              doctest::Approx(m_e).epsilon(1e-15));
      }
    }
  }

  TEST_CASE("density ignores the packet centre")
  {
    const GaussianCoM origin(3.0);
    const GaussianCoM shifted(3.0, {1.0, -7.0, 2.5});
    for (double p : {0.0, 0.1, 0.5, 2.0})
      CHECK(gaussian_momentum_density(shifted, p) == gaussian_momentum_density(origin, p));
  }

  TEST_CASE("normalisation and second moment over a range of widths")
  {
    numerics::QuadratureOptions options;
    options.rtol = 1e-12;
    options.atol = 0.0;
    for (double L : {0.1, 0.5, 1.0, 7.0, 30.0, 100.0}) {
      CAPTURE(L);
      const GaussianCoM dist(L);
      auto weight = [&](double p) { return 4.0 * std::numbers::pi * p * p * gaussian_momentum_density(dist, p); };
      const double norm = numerics::integrate_radial(weight, 0.0, 10.0 / L, options).value;
      const double second =
        numerics::integrate_radial([&](double p) { return p * p * weight(p); }, 0.0, 10.0 / L, options).value;
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(second == doctest::Approx(3.0 / (L * L)).epsilon(1e-10));
    }
  }
}
