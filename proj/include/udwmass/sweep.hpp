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
#include "udwmass/rates.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace udwmass {

enum class SweepAxis
{
  Mass,           ///< ground-state mass m_g
  MomentumSpread, ///< L_p = 1/L
  EnergyGap       ///< E
};

enum class Spacing
{
  Linear,
  Log
};

std::string_view to_string(SweepAxis axis);
SweepAxis parse_axis(std::string_view text);
Spacing parse_spacing(std::string_view text);

struct Grid
{
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 2;
  Spacing spacing = Spacing::Log;

  /// Throws ParameterError unless min < max, count >= 2 and (log) min > 0.
  void validate() const;
  /// Ascending grid points, endpoints included exactly.
  std::vector<double> points() const;
};

struct SweepSpec
{
  SweepAxis axis = SweepAxis::EnergyGap;
  Grid grid;
  /// Values of the non-swept parameters; the swept one is overwritten.
  DetectorParams fixed{1.0, 0.1};
  double width = 10.0; ///< L, unless the axis is MomentumSpread
  std::vector<MassConvention> conventions{MassConvention::SemiRel};
  Process process = Process::Emission;
  Method method = Method::ClosedForm;
  Scaling scaling = Scaling::Raw;
  std::optional<double> cutoff;
};

struct SweepRow
{
  double axis_value = 0.0;
  MassConvention convention = MassConvention::SemiRel;
  Process process = Process::Emission;
  Method method = Method::ClosedForm;
  std::optional<double> rate; ///< empty when the point failed
  double error = 0.0;
  std::string flags;          ///< semicolon-joined validity and failure tokens
};

/// Worker count for sweeps: UDWMASS_THREADS if set to a positive integer,
/// otherwise the hardware concurrency.
unsigned sweep_thread_count();

/// Evaluates every grid point for every convention. Points run
/// concurrently; rows come back in ascending axis order with conventions
/// in declared order. A failing point yields a row without a rate and a
/// flag naming the error instead of aborting the sweep.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Decimal rendering with 17 significant digits.
std::string format_number(double value);

std::string axis_column(SweepAxis axis);

/// Header plus one line per row.
void write_sweep_csv(std::ostream& out, SweepAxis axis, const std::vector<SweepRow>& rows);

enum class FigureId
{
  MassSweep,
  EmissionGrid,
  AbsorptionGrid
};

std::string_view to_string(FigureId id);
FigureId parse_figure(std::string_view text);

struct FigurePanel
{
  std::string name;                ///< file stem
  SweepSpec spec;
  std::optional<double> compton_marker;
  /// Asymptote position per convention (parallel to spec.conventions).
  std::vector<std::optional<double>> asymptote_markers;
  /// Fixed parameters chosen by this repository (written to the .meta file).
  std::vector<std::pair<std::string, std::string>> metadata;
};

struct FigureRecipe
{
  FigureId id;
  std::vector<FigurePanel> panels;
};

inline constexpr std::size_t kFigureGridPoints = 200;

/**
 * Default panel layout.
 *
 * MassSweep: units of E (E = c = lambda = 1), L E = 1, m_g/E on a log grid
 * in [1, 1e4], ClassicalUnit scaling; one panel per nonrelativistic mass,
 * each with the classical, semirelativistic and nonrelativistic curves.
 *
 * EmissionGrid / AbsorptionGrid: m_g = c = lambda = 1, ComptonUnit
 * scaling, 2x2 panels (rate vs L_p and rate vs E, for M = m_g and M = m_e).
 * L_p runs over [0.01, 1.2] at E = 0.1; E runs over [1e-3, 0.45] (emission)
 * or [1e-3, 0.999] (absorption) at L_p = 0.1.
 */
FigureRecipe figure_recipe(FigureId id);

struct FigurePanelData
{
  const FigurePanel* panel;
  std::vector<SweepRow> rows;
};

std::vector<FigurePanelData> run_figure(const FigureRecipe& recipe, unsigned threads = 0);

/// Writes <dir>/<panel>.csv and <dir>/<panel>.meta for every panel and
/// returns the CSV paths.
std::vector<std::filesystem::path> write_figure(const FigureRecipe& recipe,
                                                const std::vector<FigurePanelData>& data,
                                                const std::filesystem::path& directory);

} // namespace udwmass
