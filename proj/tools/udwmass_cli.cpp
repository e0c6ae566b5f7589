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

// Command-line front end: single rates, sweeps, figure data and the
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
// 3 numerical failure.

#include "udwmass/config.hpp"
#include "udwmass/errors.hpp"
#include "udwmass/model.hpp"
#include "udwmass/rates.hpp"
#include "udwmass/sweep.hpp"
#include "udwmass/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace udwmass;

constexpr int kExitVerification = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

struct PhysicsOptions
{
  double ground_mass = 1.0;
  double energy_gap = 0.1;
  double c = 1.0;
  double lambda = 1.0;
  double width = 10.0;
  std::optional<double> momentum_spread;
  std::optional<double> cutoff;
  std::string process = "emission";
  std::string convention = "semirel";
  std::string method = "closed";
  std::string scale = "raw";

  double resolved_width() const { return momentum_spread ? 1.0 / *momentum_spread : width; }
};

void add_physics_options(CLI::App* sub, PhysicsOptions& o)
{
  sub->add_option("--mg", o.ground_mass, "ground-state mass m_g")->capture_default_str();
  sub->add_option("--E", o.energy_gap, "internal energy gap E")->capture_default_str();
  sub->add_option("--c", o.c, "speed of light")->capture_default_str();
  sub->add_option("--lambda", o.lambda, "coupling strength")->capture_default_str();
  auto* width = sub->add_option("--L", o.width, "wave-packet width L")->capture_default_str();
  sub->add_option("--Lp", o.momentum_spread, "momentum spread L_p = 1/L")->excludes(width);
  sub->add_option("--cutoff", o.cutoff, "momentum cutoff K (absorption default: L_p)");
  sub->add_option("--process", o.process, "emission | absorption")->capture_default_str();
  sub->add_option("--method", o.method, "closed | quadrature")->capture_default_str();
  sub->add_option("--scale", o.scale, "raw | classical | compton")->capture_default_str();
}

// Config values are inserted as ordinary flags ahead of the user's own, so
// explicit flags always win; unknown keys are rejected.
std::vector<std::string> merge_config(CLI::App& app, const std::vector<std::string>& argv,
                                      const std::set<std::string>& boolean_flags)
{
  std::optional<std::string> config_path;
  std::string subcommand;
  for (std::size_t i = 1; i < argv.size(); ++i) {
    const std::string& arg = argv[i];
    if (subcommand.empty() && !arg.empty() && arg[0] != '-') subcommand = arg;
    if (arg == "--config" && i + 1 < argv.size()) config_path = argv[i + 1];
    else if (arg.rfind("--config=", 0) == 0) config_path = arg.substr(9);
  }
  if (!config_path || subcommand.empty()) return argv;

  CLI::App* sub = app.get_subcommand_no_throw(subcommand);
  if (!sub) return argv;

  std::vector<std::string> injected;
  for (const auto& [key, value] : read_config(*config_path)) {
    const std::string flag = "--" + key;
    if (key == "config" || sub->get_option_no_throw(flag) == nullptr)
      throw ParameterError("unknown config key '" + key + "' for '" + subcommand + "'");
    const bool given = std::any_of(argv.begin(), argv.end(), [&flag](const std::string& arg) {
      return arg == flag || arg.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    if (boolean_flags.count(key)) {
      if (value == "true" || value == "1") injected.push_back(flag);
      else if (value != "false" && value != "0")
        throw ParameterError("config key '" + key + "' expects true or false");
      continue;
    }
    injected.push_back(flag);
    injected.push_back(value);
  }

  std::vector<std::string> merged(argv.begin(), argv.end());
  const auto position = std::find(merged.begin() + 1, merged.end(), subcommand) + 1;
  merged.insert(position, injected.begin(), injected.end());
  return merged;
}

std::vector<MassConvention> parse_convention_list(const std::string& text)
{
  std::vector<MassConvention> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ','))
    if (!item.empty()) out.push_back(parse_convention(item));
  if (out.empty()) throw ParameterError("empty convention list");
  return out;
}

int run_rate(const PhysicsOptions& o, bool force)
{
  const DetectorParams params(o.ground_mass, o.energy_gap, o.c, o.lambda);
  const Process process = parse_process(o.process);
  const MassConvention convention = parse_convention(o.convention);
  const Method method = parse_method(o.method);
  const Scaling scaling = parse_scaling(o.scale);
  const GaussianCoM dist(o.resolved_width());

  if (process == Process::Absorption && convention == MassConvention::Classical) {
    std::cerr << "error: classical absorption rate undefined (it diverges with the mass)\n";
    return kExitInvalid;
  }
  const auto report = validate_process(params, process, dist, o.cutoff);
  if (!report.ok() && !force) {
    std::cerr << "error: invalid parameters: " << report.describe() << " (use --force)\n";
    return kExitInvalid;
  }

  RateRequest request{params};
  request.convention = convention;
  request.process = process;
  request.dist = dist;
  request.method = method;
  request.cutoff = o.cutoff;

  RateResult result;
  try {
    result = compute_rate(request, scaling);
  } catch (const AsymptoteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }

  std::cout << "process,convention,method,m_g,E,c,lambda,L,cutoff,scaling,rate,error,flags\n";
  std::cout << to_string(process) << ',' << to_string(convention) << ',' << to_string(method)
            << ',' << format_number(params.ground_mass()) << ','
            << format_number(params.energy_gap()) << ',' << format_number(params.speed_of_light())
            << ',' << format_number(params.coupling()) << ',' << format_number(dist.width())
            << ',' << (o.cutoff ? format_number(*o.cutoff) : std::string()) << ','
            << to_string(scaling) << ',' << format_number(result.value) << ','
            << format_number(result.abs_error_estimate) << ',' << result.flags.to_string()
            << '\n';
  return 0;
}

struct SweepOptions
{
  std::string axis = "energy";
  double min = 1e-3;
  double max = 0.45;
  std::size_t count = kFigureGridPoints;
  std::string spacing = "log";
  std::string conventions = "semirel,nonrel-mg";
  std::string out = "-";
};

int run_sweep_command(const PhysicsOptions& o, const SweepOptions& s)
{
  SweepSpec spec;
  spec.axis = parse_axis(s.axis);
  spec.grid = {s.min, s.max, s.count, parse_spacing(s.spacing)};
  spec.grid.validate();
  spec.fixed = DetectorParams(o.ground_mass, o.energy_gap, o.c, o.lambda);
  spec.width = o.resolved_width();
  spec.conventions = parse_convention_list(s.conventions);
  spec.process = parse_process(o.process);
  spec.method = parse_method(o.method);
  spec.scaling = parse_scaling(o.scale);
  spec.cutoff = o.cutoff;

  const auto rows = run_sweep(spec);
  if (s.out == "-") {
    write_sweep_csv(std::cout, spec.axis, rows);
  } else {
    std::ofstream file(s.out);
    if (!file) {
      std::cerr << "error: cannot write " << s.out << '\n';
      return kExitInvalid;
    }
    write_sweep_csv(file, spec.axis, rows);
  }
  return 0;
}

int run_figure_command(const std::string& id, const std::string& directory)
{
  std::vector<FigureId> ids;
  if (id == "all") ids = {FigureId::MassSweep, FigureId::EmissionGrid, FigureId::AbsorptionGrid};
  else ids = {parse_figure(id)};
  for (auto figure : ids) {
    const auto recipe = figure_recipe(figure);
    const auto data = run_figure(recipe);
    for (const auto& path : write_figure(recipe, data, directory))
      std::cout << path.string() << '\n';
  }
  return 0;
}

int run_verify(const std::string& selector)
{
  bool ok = true;
  for (const auto& report : verify::run_suites(selector)) {
    verify::print_report(std::cout, report);
    ok = ok && report.passed();
  }
  return ok ? 0 : kExitVerification;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Transition rates of an Unruh-DeWitt detector with quantized mass-energy"};
  app.require_subcommand(1);
  std::string config_path;

  PhysicsOptions rate_options;
  bool force = false;
  auto* rate = app.add_subcommand("rate", "single rate as a one-record CSV");
  add_physics_options(rate, rate_options);
  rate->add_option("--convention", rate_options.convention,
                   "semirel | nonrel-mg | nonrel-me | classical")
    ->capture_default_str();
  rate->add_flag("--force", force, "compute even if the parameters fail validation");
  rate->add_option("--config", config_path, "key=value defaults file");

  PhysicsOptions sweep_physics;
  SweepOptions sweep_options;
  auto* sweep = app.add_subcommand("sweep", "rate over a parameter grid as CSV");
  add_physics_options(sweep, sweep_physics);
  sweep->add_option("--axis", sweep_options.axis, "mass | lp | energy")->capture_default_str();
  sweep->add_option("--min", sweep_options.min, "first grid value")->capture_default_str();
  sweep->add_option("--max", sweep_options.max, "last grid value")->capture_default_str();
  sweep->add_option("--count", sweep_options.count, "grid points")->capture_default_str();
  sweep->add_option("--spacing", sweep_options.spacing, "linear | log")->capture_default_str();
  sweep->add_option("--conventions", sweep_options.conventions, "comma-separated conventions")
    ->capture_default_str();
  sweep->add_option("--out", sweep_options.out, "output CSV ('-' for stdout)")
    ->capture_default_str();
  sweep->add_option("--config", config_path, "key=value defaults file");

  std::string figure_id = "all";
  std::string figure_dir = "figures";
  auto* figure = app.add_subcommand("figure", "figure data as CSV panels");
  figure->add_option("--id", figure_id, "mass | emission | absorption | all")
    ->capture_default_str();
  figure->add_option("--out", figure_dir, "output directory")->capture_default_str();
  figure->add_option("--config", config_path, "key=value defaults file");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", suite, "identity | oracle | quadrature | limits | all")
    ->capture_default_str();

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = merge_config(app, args, {"force"});
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  } catch (const udwmass::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*rate) return run_rate(rate_options, force);
    if (*sweep) return run_sweep_command(sweep_physics, sweep_options);
    if (*figure) return run_figure_command(figure_id, figure_dir);
    if (*verify_cmd) return run_verify(suite);
  } catch (const udwmass::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const udwmass::InvalidConvention& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const udwmass::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
