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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "esdlab/app/config.hpp"
#include "esdlab/entanglement.hpp"
#include "esdlab/trajectory.hpp"

namespace esdlab::app {

enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitIntegration = 3, kExitOracleMismatch = 4 };

inline constexpr const char* kCsvHeader =
    "t,concurrence,ctilde,rho11,rho22,rho33,rho44,re_rho23,im_rho23,trace_error,min_eigval";

struct RunResult {
  int exit_code = kExitOk;
  std::string message;
  Trajectory trajectory;             // numeric when available, else analytic
  std::vector<double> max_elem_dev;  // compare only, one entry per sample
  EntanglementReport report;
  nlohmann::json json;
};

// Runs one scenario and writes the files named in s.output (empty paths are
// skipped). Errors are reported through exit_code, never thrown.
RunResult run(const Scenario& s);

std::string to_csv(const RunResult& r, bool with_deviation);

struct SweepResult {
  int exit_code = kExitOk;
  std::string message;
  std::vector<std::string> files;
  nlohmann::json aggregate;
};

// File name for one sweep point: "out.csv" -> "out_gamma0=0.2.csv".
std::string sweep_path(const std::string& path, const std::string& axis, double value);

// Runs every sweep point on at most `jobs` threads (0 = hardware
// concurrency). On failure all files written by the sweep are removed.
SweepResult run_sweep(const SweepSpec& spec, unsigned jobs = 0);

}  // namespace esdlab::app
