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

#include "esdlab/app/runner.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "esdlab/closed_form.hpp"
#include "esdlab/liouville.hpp"

namespace esdlab::app {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json echo(const Scenario& s) {
  const EnvironmentSpec& e = s.environment;
  return {
      {"name", s.name},
      {"source", s.source},
      {"engine", to_string(s.engine)},
      {"state", {{"a", s.state.a}, {"b", s.state.b}, {"c", s.state.c}, {"d", s.state.d}, {"chi", s.state.chi}}},
      {"system", {{"omega0", s.system.omega0}, {"v", s.system.v}}},
      {"environment",
       {{"model", to_string(e.model)},
        {"gamma_a", e.gamma_a},
        {"gamma_b", e.gamma_b},
        {"big_gamma_a", e.big_gamma_a},
        {"big_gamma_b", e.big_gamma_b},
        {"gamma_corr", e.gamma_corr},
        {"gamma0", e.gamma0}}},
      {"grid", {{"t_max", s.grid.t_max}, {"samples", s.grid.samples}}},
      {"oracle_tol", s.oracle_tol},
      {"zero_tol", s.zero_tol},
      {"config", emit_config(s)},
  };
}

json report_json(const EntanglementReport& r) {
  json dark = json::array();
  for (const auto& iv : r.dark_intervals) dark.push_back({{"start", iv.start}, {"end", iv.end}});
  json peaks = json::array();
  for (const auto& p : r.bright_peaks) peaks.push_back({{"t", p.t}, {"value", p.value}});
  return {{"dark_intervals", dark},
          {"bright_peaks", peaks},
          {"esd_time", r.esd_time ? json(*r.esd_time) : json(nullptr)},
          {"horizon", r.horizon}};
}

void write_file(const std::string& path, const std::string& content) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

RunResult fail(RunResult r, int code, const std::string& msg) {
  r.exit_code = code;
  r.message = msg;
  return r;
}

}  // namespace

std::string to_csv(const RunResult& r, bool with_deviation) {
  std::string out = kCsvHeader;
  if (with_deviation) out += ",max_elem_dev";
  out += '\n';
  const Trajectory& tr = r.trajectory;
  for (std::size_t k = 0; k < tr.size(); ++k) {
    const DensityMatrix& rho = tr.states[k];
    const double fields[] = {tr.times[k],
                             tr.concurrence[k],
                             tr.ctilde[k],
                             rho(0, 0).real(),
                             rho(1, 1).real(),
                             rho(2, 2).real(),
                             rho(3, 3).real(),
                             rho(1, 2).real(),
                             rho(1, 2).imag(),
                             tr.diagnostics[k].trace_error,
                             tr.diagnostics[k].min_eigenvalue};
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (i) out += ',';
      out += format_real(fields[i]);
    }
    if (with_deviation) {
      out += ',';
      out += format_real(k < r.max_elem_dev.size() ? r.max_elem_dev[k] : 0.0);
    }
    out += '\n';
  }
  return out;
}

RunResult run(const Scenario& s) {
  RunResult r;
  r.json = {{"scenario", echo(s)}};
  DensityMatrix rho0;
  std::vector<double> grid;
  try {
    validate(s);
    rho0 = build_initial_density(s.state);
    grid = uniform_grid(s.grid.t_max, s.grid.samples);
  } catch (const Error& e) {
    return fail(std::move(r), kExitValidation, e.what());
  }

  const bool numeric = s.engine != Engine::Analytic;
  const bool analytic = s.engine != Engine::Numeric;
  Trajectory exact;
  CtildeEvaluator evaluator;
  try {
    if (analytic) {
      exact = closed_form::analytic_trajectory(rho0, s.system, s.environment, grid);
      evaluator = closed_form::ctilde_evaluator(rho0, s.system, s.environment);
    }
    r.trajectory = numeric ? evolve(rho0, s.system, s.environment, grid, s.integrator) : std::move(exact);
  } catch (const IntegrationError& e) {
    return fail(std::move(r), kExitIntegration, e.what());
  } catch (const NumericalError& e) {
    return fail(std::move(r), kExitIntegration, e.what());
  } catch (const Error& e) {
    return fail(std::move(r), kExitValidation, e.what());
  }

  double worst_dev = 0.0;
  if (s.engine == Engine::Compare) {
    r.max_elem_dev.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      r.max_elem_dev[k] = max_abs_diff(r.trajectory.states[k], exact.states[k]);
      worst_dev = std::max(worst_dev, r.max_elem_dev[k]);
    }
  }

  try {
    r.report = analyze(r.trajectory, s.zero_tol, evaluator);
  } catch (const Error& e) {
    return fail(std::move(r), kExitValidation, e.what());
  }

  double max_trace = 0.0, max_herm = 0.0, min_eig = 0.0;
  for (std::size_t k = 0; k < r.trajectory.size(); ++k) {
    const Diagnostics& d = r.trajectory.diagnostics[k];
    max_trace = std::max(max_trace, d.trace_error);
    max_herm = std::max(max_herm, d.hermiticity_error);
    min_eig = k == 0 ? d.min_eigenvalue : std::min(min_eig, d.min_eigenvalue);
  }
  json diag = {{"max_trace_error", max_trace}, {"max_hermiticity_error", max_herm}, {"min_eigenvalue", min_eig}};
  if (s.engine == Engine::Compare) diag["max_elem_dev"] = worst_dev;
  r.json.update(report_json(r.report));
  r.json["diagnostics"] = diag;

  if (s.engine == Engine::Compare && worst_dev > s.oracle_tol) {
    r.exit_code = kExitOracleMismatch;
    r.message = "numeric and analytic states differ by " + format_real(worst_dev) + " > oracle_tol " +
                format_real(s.oracle_tol);
  }
  r.json["diagnostics"]["exit_code"] = r.exit_code;

  try {
    if (!s.output.csv_path.empty()) write_file(s.output.csv_path, to_csv(r, s.engine == Engine::Compare));
    if (!s.output.json_path.empty()) write_file(s.output.json_path, r.json.dump(2) + "\n");
  } catch (const std::exception& e) {
    return fail(std::move(r), kExitValidation, e.what());
  }
  return r;
}

std::string sweep_path(const std::string& path, const std::string& axis, double value) {
  const fs::path p(path);
  fs::path out = p.parent_path() / (p.stem().string() + "_" + axis + "=" + format_real(value));
  out += p.extension();
  return out.string();
}

SweepResult run_sweep(const SweepSpec& spec, unsigned jobs) {
  SweepResult result;
  try {
    validate(spec);
  } catch (const Error& e) {
    result.exit_code = kExitValidation;
    result.message = e.what();
    return result;
  }

  const std::size_t n = spec.values.size();
  std::vector<Scenario> points;
  points.reserve(n);
  for (double v : spec.values) {
    Scenario s = instantiate(spec, v);
    s.output.json_path.clear();
    if (!spec.base.output.csv_path.empty()) s.output.csv_path = sweep_path(spec.base.output.csv_path, spec.axis, v);
    points.push_back(std::move(s));
  }

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));

  std::vector<RunResult> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      results[i] = run(points[i]);
      results[i].trajectory = {};  // only the report is aggregated
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& p : points) {
    if (!p.output.csv_path.empty() && fs::exists(p.output.csv_path)) result.files.push_back(p.output.csv_path);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (results[i].exit_code != kExitOk) {
      result.exit_code = results[i].exit_code;
      result.message = spec.axis + " = " + format_real(spec.values[i]) + ": " + results[i].message;
      std::error_code ec;
      for (const auto& f : result.files) fs::remove(f, ec);
      result.files.clear();
      return result;
    }
  }

  json entries = json::object();
  for (std::size_t i = 0; i < n; ++i) {
    const EntanglementReport& rep = results[i].report;
    entries[format_real(spec.values[i])] = {
        {"esd_time", rep.esd_time ? json(*rep.esd_time) : json(nullptr)},
        {"n_dark_intervals", rep.dark_intervals.size()},
        {"first_dark_start",
         rep.dark_intervals.empty() ? json(nullptr) : json(rep.dark_intervals.front().start)}};
  }
  result.aggregate = {{"axis", spec.axis}, {"base", echo(spec.base)}, {"results", entries}};
  result.aggregate["base"]["config"] = emit_config(spec);

  if (!spec.base.output.json_path.empty()) {
    try {
      write_file(spec.base.output.json_path, result.aggregate.dump(2) + "\n");
      result.files.push_back(spec.base.output.json_path);
    } catch (const std::exception& e) {
      std::error_code ec;
      for (const auto& f : result.files) fs::remove(f, ec);
      result.files.clear();
      result.exit_code = kExitValidation;
      result.message = e.what();
    }
  }
  return result;
}

}  // namespace esdlab::app
