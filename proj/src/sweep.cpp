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

#include "udwmass/sweep.hpp"

#include "udwmass/errors.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace udwmass {

std::string_view to_string(SweepAxis axis)
{
  switch (axis) {
    case SweepAxis::Mass: return "mass";
    case SweepAxis::MomentumSpread: return "lp";
    case SweepAxis::EnergyGap: return "energy";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view text)
{
  if (text == "mass") return SweepAxis::Mass;
  if (text == "lp" || text == "momentum-spread") return SweepAxis::MomentumSpread;
  if (text == "energy" || text == "E") return SweepAxis::EnergyGap;
  throw ParameterError("unknown sweep axis '" + std::string(text) + "'");
}

Spacing parse_spacing(std::string_view text)
{
  if (text == "linear") return Spacing::Linear;
  if (text == "log") return Spacing::Log;
  throw ParameterError("unknown grid spacing '" + std::string(text) + "'");
}

void Grid::validate() const
{
  if (!(min < max)) throw ParameterError("sweep grid needs min < max");
  if (count < 2) throw ParameterError("sweep grid needs at least two points");
  if (spacing == Spacing::Log && !(min > 0.0))
    throw ParameterError("log-spaced sweep grid needs min > 0");
}

std::vector<double> Grid::points() const
{
  validate();
  std::vector<double> out(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / last;
    out[i] = spacing == Spacing::Linear ? min + (max - min) * f
                                        : std::exp(std::log(min) + (std::log(max) - std::log(min)) * f);
  }
  out.front() = min;
  out.back() = max;
  return out;
}

unsigned sweep_thread_count()
{
  if (const char* env = std::getenv("UDWMASS_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

SweepRow evaluate_point(const SweepSpec& spec, double axis_value, MassConvention convention)
{
  SweepRow row;
  row.axis_value = axis_value;
  row.convention = convention;
  row.process = spec.process;
  row.method = spec.method;

  std::string failure;
  try {
    double width = spec.width;
    DetectorParams params = spec.fixed;
    switch (spec.axis) {
      case SweepAxis::Mass: params = spec.fixed.with_ground_mass(axis_value); break;
      case SweepAxis::EnergyGap: params = spec.fixed.with_energy_gap(axis_value); break;
      case SweepAxis::MomentumSpread:
        if (!(axis_value > 0.0)) throw ParameterError("momentum spread must be positive");
        width = 1.0 / axis_value;
        break;
    }
    RateRequest request{params};
    request.convention = convention;
    request.process = spec.process;
    request.dist = GaussianCoM(width);
    request.method = spec.method;
    request.cutoff = spec.cutoff;
    const RateResult result = compute_rate(request, spec.scaling);
    row.rate = result.value;
    row.error = result.abs_error_estimate;
    row.flags = result.flags.to_string();
    return row;
  } catch (const AsymptoteError&) {
    failure = "AsymptoteError";
  } catch (const DomainError&) {
    failure = "DomainError";
  } catch (const QuadratureFailure&) {
    failure = "QuadratureFailure";
  } catch (const InvalidConvention&) {
    failure = "InvalidConvention";
  } catch (const ParameterError&) {
    failure = "ParameterError";
  } catch (const Error&) {
    failure = "Error";
  }
  row.rate.reset();
  row.error = 0.0;
  row.flags = failure;
  return row;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads)
{
  const auto axis_values = spec.grid.points();
  if (spec.conventions.empty()) throw ParameterError("sweep needs at least one convention");
  const std::size_t per_point = spec.conventions.size();
  const std::size_t total = axis_values.size() * per_point;
  std::vector<SweepRow> rows(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++)
      rows[i] = evaluate_point(spec, axis_values[i / per_point], spec.conventions[i % per_point]);
  };
  if (threads == 0) threads = sweep_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

std::string format_number(double value)
{
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string axis_column(SweepAxis axis)
{
  switch (axis) {
    case SweepAxis::Mass: return "m_g";
    case SweepAxis::MomentumSpread: return "L_p";
    case SweepAxis::EnergyGap: return "E";
  }
  return "axis";
}

namespace {

void write_row_prefix(std::ostream& out, const SweepRow& row)
{
  out << format_number(row.axis_value) << ',' << to_string(row.convention) << ','
      << to_string(row.process) << ',' << to_string(row.method) << ',';
  if (row.rate) out << format_number(*row.rate) << ',' << format_number(row.error);
  else out << ',';
  out << ',' << row.flags;
}

} // namespace

void write_sweep_csv(std::ostream& out, SweepAxis axis, const std::vector<SweepRow>& rows)
{
  out << axis_column(axis) << ",convention,process,method,rate,error,flags\n";
  for (const auto& row : rows) {
    write_row_prefix(out, row);
    out << '\n';
  }
}

std::string_view to_string(FigureId id)
{
  switch (id) {
    case FigureId::MassSweep: return "mass";
    case FigureId::EmissionGrid: return "emission";
    case FigureId::AbsorptionGrid: return "absorption";
  }
  return "?";
}

FigureId parse_figure(std::string_view text)
{
  if (text == "mass" || text == "fig1") return FigureId::MassSweep;
  if (text == "emission" || text == "fig2") return FigureId::EmissionGrid;
  if (text == "absorption" || text == "fig3") return FigureId::AbsorptionGrid;
  throw ParameterError("unknown figure '" + std::string(text) + "'");
}

namespace {

FigureRecipe mass_sweep_recipe()
{
  FigureRecipe recipe{FigureId::MassSweep, {}};
  for (auto nonrel : {MassConvention::NonRelMg, MassConvention::NonRelMe}) {
    FigurePanel panel;
    panel.name = nonrel == MassConvention::NonRelMg ? "fig1_mass_M_mg" : "fig1_mass_M_me";
    panel.spec.axis = SweepAxis::Mass;
    panel.spec.grid = {1.0, 1e4, kFigureGridPoints, Spacing::Log};
    panel.spec.fixed = DetectorParams(1.0, 1.0, 1.0, 1.0);
    panel.spec.width = 1.0; // L E = 1
    panel.spec.conventions = {MassConvention::Classical, MassConvention::SemiRel, nonrel};
    panel.spec.process = Process::Emission;
    panel.spec.scaling = Scaling::ClassicalUnit;
    panel.asymptote_markers.assign(3, std::nullopt);
    panel.metadata = {{"units", "energy gap E (E = c = 1)"},
                      {"L*E", "1"},
                      {"m_g/E range", "[1, 1e4] log, repo default"}};
    recipe.panels.push_back(std::move(panel));
  }
  return recipe;
}

FigureRecipe grid_recipe(FigureId id)
{
  const bool emission = id == FigureId::EmissionGrid;
  const Process process = emission ? Process::Emission : Process::Absorption;
  const std::string prefix = emission ? "fig2_emission" : "fig3_absorption";
  constexpr double kFixedGap = 0.1;
  constexpr double kFixedSpread = 0.1;
  const double gap_max = emission ? 0.45 : 0.999;

  FigureRecipe recipe{id, {}};
  for (bool spread_axis : {true, false}) {
    for (auto nonrel : {MassConvention::NonRelMg, MassConvention::NonRelMe}) {
      FigurePanel panel;
      const std::string mass_tag = nonrel == MassConvention::NonRelMg ? "M_mg" : "M_me";
      panel.name = prefix + (spread_axis ? "_Lp_" : "_E_") + mass_tag;
      SweepSpec& spec = panel.spec;
      spec.process = process;
      spec.conventions = {MassConvention::SemiRel, nonrel};
      spec.scaling = Scaling::ComptonUnit;
      if (spread_axis) {
        spec.axis = SweepAxis::MomentumSpread;
        spec.grid = {0.01, 1.2, kFigureGridPoints, Spacing::Log};
        spec.fixed = DetectorParams(1.0, kFixedGap, 1.0, 1.0);
        panel.compton_marker = 1.0;
        panel.asymptote_markers.assign(2, std::nullopt);
        panel.metadata = {{"E", format_number(kFixedGap) + " (repo default)"},
                          {"L_p range", "[0.01, 1.2] log, repo default"}};
      } else {
        spec.axis = SweepAxis::EnergyGap;
        spec.grid = {1e-3, gap_max, kFigureGridPoints, Spacing::Log};
        spec.fixed = DetectorParams(1.0, 0.0, 1.0, 1.0);
        spec.width = 1.0 / kFixedSpread;
        if (emission) {
          panel.asymptote_markers.assign(2, std::nullopt);
        } else {
          // 2E = m_e c^2 <=> E = m_g c^2; 2E = M c^2 with M = m_g or m_e = m_g + E/c^2.
          const double nonrel_asymptote = nonrel == MassConvention::NonRelMg ? 0.5 : 1.0;
          panel.asymptote_markers = {1.0, nonrel_asymptote};
        }
        panel.metadata = {{"L_p", format_number(kFixedSpread) + " (repo default)"},
                          {"E range", "[1e-3, " + format_number(gap_max) + "] log, repo default"}};
      }
      panel.metadata.insert(panel.metadata.begin(),
                            {"units", "m_g = c = 1; rates in m_g c^2, L_p in m_g c, E in m_g c^2"});
      recipe.panels.push_back(std::move(panel));
    }
  }
  return recipe;
}

} // namespace

FigureRecipe figure_recipe(FigureId id)
{
  return id == FigureId::MassSweep ? mass_sweep_recipe() : grid_recipe(id);
}

std::vector<FigurePanelData> run_figure(const FigureRecipe& recipe, unsigned threads)
{
  std::vector<FigurePanelData> out;
  for (const auto& panel : recipe.panels) out.push_back({&panel, run_sweep(panel.spec, threads)});
  return out;
}

std::vector<std::filesystem::path> write_figure(const FigureRecipe& recipe,
                                                const std::vector<FigurePanelData>& data,
                                                const std::filesystem::path& directory)
{
  std::filesystem::create_directories(directory);
  std::vector<std::filesystem::path> written;
  for (const auto& entry : data) {
    const FigurePanel& panel = *entry.panel;
    const auto csv_path = directory / (panel.name + ".csv");
    std::ofstream csv(csv_path);
    if (!csv) throw Error("cannot write " + csv_path.string());
    csv << axis_column(panel.spec.axis)
        << ",convention,process,method,rate,error,flags,compton_marker,asymptote_marker\n";
    const auto& conventions = panel.spec.conventions;
    for (const auto& row : entry.rows) {
      write_row_prefix(csv, row);
      csv << ',';
      if (panel.compton_marker) csv << format_number(*panel.compton_marker);
      csv << ',';
      for (std::size_t i = 0; i < conventions.size(); ++i)
        if (conventions[i] == row.convention && i < panel.asymptote_markers.size() &&
            panel.asymptote_markers[i])
          csv << format_number(*panel.asymptote_markers[i]);
      csv << '\n';
    }

    std::ofstream meta(directory / (panel.name + ".meta"));
    meta << "figure=" << to_string(recipe.id) << '\n';
    meta << "scaling=" << to_string(panel.spec.scaling) << '\n';
    meta << "points=" << panel.spec.grid.count << '\n';
    for (const auto& [key, value] : panel.metadata) meta << key << '=' << value << '\n';
    written.push_back(csv_path);
  }
  return written;
}

} // namespace udwmass
