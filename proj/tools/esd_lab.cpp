// Copyright 2026 The esdlab Authors
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "esdlab/app/config.hpp"
#include "esdlab/app/presets.hpp"
#include "esdlab/app/runner.hpp"

namespace {

using namespace esdlab::app;

struct Overrides {
  std::string engine;
  std::optional<double> oracle_tol;
  std::optional<double> zero_tol;
  unsigned jobs = 0;
};

void apply(const Overrides& o, Scenario& s) {
  if (!o.engine.empty()) s.engine = parse_engine(o.engine);
  if (o.oracle_tol) s.oracle_tol = *o.oracle_tol;
  if (o.zero_tol) s.zero_tol = *o.zero_tol;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void default_outputs(Scenario& s, const std::filesystem::path& stem) {
  if (s.output.csv_path.empty()) s.output.csv_path = stem.string() + ".csv";
  if (s.output.json_path.empty()) s.output.json_path = stem.string() + ".json";
}

int report(const RunResult& r, const Scenario& s) {
  if (r.exit_code != kExitOk) {
    std::cerr << "esd-lab: " << (s.name.empty() ? std::string() : s.name + ": ") << r.message << "\n";
  }
  if (r.exit_code == kExitOk || r.exit_code == kExitOracleMismatch) {
    std::cout << (s.name.empty() ? s.output.csv_path : s.name) << ": " << r.report.dark_intervals.size()
              << " dark interval(s), esd_time "
              << (r.report.esd_time ? format_real(*r.report.esd_time) : std::string("none")) << "\n";
  }
  return r.exit_code;
}

int cmd_run(const std::string& path, const Overrides& o) {
  Config cfg = parse_config(read_file(path));
  auto* s = std::get_if<Scenario>(&cfg);
  if (!s) throw ValidationError("config has a [sweep] section; use 'esd-lab sweep'");
  apply(o, *s);
  default_outputs(*s, std::filesystem::path(path).replace_extension());
  return report(run(*s), *s);
}

int cmd_preset(const std::string& name, const std::string& out_dir, const Overrides& o) {
  const std::vector<Scenario> scenarios = figure_preset(name);
  int status = kExitOk;
  for (std::size_t k = 0; k < scenarios.size(); ++k) {
    Scenario s = scenarios[k];
    apply(o, s);
    default_outputs(s, std::filesystem::path(out_dir) / (name + "_" + std::to_string(k + 1)));
    const int code = report(run(s), s);
    if (status == kExitOk) status = code;
  }
  return status;
}

int cmd_sweep(const std::string& path, const Overrides& o) {
  Config cfg = parse_config(read_file(path));
  auto* spec = std::get_if<SweepSpec>(&cfg);
  if (!spec) throw ValidationError("config has no [sweep] section; use 'esd-lab run'");
  apply(o, spec->base);
  const auto stem = std::filesystem::path(path).replace_extension();
  default_outputs(spec->base, stem);
  const SweepResult r = run_sweep(*spec, o.jobs);
  if (r.exit_code != kExitOk) {
    std::cerr << "esd-lab: " << r.message << "\n";
    return r.exit_code;
  }
  for (const auto& f : r.files) std::cout << f << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entanglement dynamics under decohering environments"};
  app.require_subcommand(1);

  Overrides o;
  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--engine", o.engine, "numeric, analytic or compare")
        ->check(CLI::IsMember({"numeric", "analytic", "compare"}));
    sub->add_option("--oracle-tol", o.oracle_tol, "largest allowed numeric/analytic deviation");
    sub->add_option("--zero-tol", o.zero_tol, "concurrence at or below this counts as zero");
  };

  std::string config_path;
  std::string preset_name;
  std::string out_dir = ".";

  CLI::App* run_cmd = app.add_subcommand("run", "run one scenario config");
  run_cmd->add_option("config", config_path, "scenario config file")->required();
  add_common(run_cmd);

  CLI::App* preset_cmd = app.add_subcommand("preset", "run the scenarios of a figure preset");
  preset_cmd->add_option("name", preset_name, "fig2, fig3a, fig3b, fig5, fig6, fig7, fig8, fig9, fig11, fig12, fig13, fig14")
      ->required();
  preset_cmd->add_option("--out", out_dir, "output directory");
  add_common(preset_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter of a scenario config");
  sweep_cmd->add_option("config", config_path, "config file with a [sweep] section")->required();
  sweep_cmd->add_option("--jobs", o.jobs, "worker threads (0 = hardware concurrency)");
  add_common(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(config_path, o);
    if (preset_cmd->parsed()) return cmd_preset(preset_name, out_dir, o);
    if (sweep_cmd->parsed()) return cmd_sweep(config_path, o);
  } catch (const esdlab::Error& e) {
    std::cerr << "esd-lab: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "esd-lab: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
