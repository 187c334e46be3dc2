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

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "esdlab/entanglement.hpp"
#include "esdlab/errors.hpp"
#include "esdlab/liouville.hpp"
#include "esdlab/qstate.hpp"

namespace esdlab::app {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class Engine { Numeric, Analytic, Compare };

std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view name);

struct GridSpec {
  double t_max = 5.0;
  std::size_t samples = 2001;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct OutputSpec {
  std::string csv_path;
  std::string json_path;

  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct Scenario {
  std::string name;
  std::string source;  // where each number came from, echoed into the report
  InitialStateParams state = InitialStateParams::one_parameter(0.0, 0.0);
  SystemParams system;
  EnvironmentSpec environment;
  GridSpec grid;
  Engine engine = Engine::Compare;
  IntegratorConfig integrator;
  double oracle_tol = 1e-6;
  double zero_tol = kDefaultZeroTol;
  OutputSpec output;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Sweep axes: a, chi, v, gamma, Gamma, gamma12, gamma0.
struct SweepSpec {
  Scenario base;
  std::string axis;
  std::vector<double> values;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

using Config = std::variant<Scenario, SweepSpec>;

// Sectioned key/value text:
//
//   [state]        a, b, c, d, chi
//   [system]       omega0, v
//   [environment]  model, gamma_a, gamma_b, big_gamma_a, big_gamma_b,
//                  gamma_corr, gamma0 (aliases: gamma, Gamma, gamma12)
//   [grid]         t_max, samples
//   [engine]       engine, oracle_tol, zero_tol, rel_tol, abs_tol, max_step,
//                  method, hermitize_each_step, trace_error_limit
//   [output]       csv_path, json_path, name, source
//   [sweep]        axis, values
//
// '#' and ';' start comments. Reals accept multiples of pi ("pi/4", "2pi",
// "3*pi/2"). When [state] sets only a, b = c = 1 and d = 1 - a.
Config parse_config(std::string_view text);
Scenario parse_scenario(std::string_view text);

// Parses a real or a pi expression. Throws std::invalid_argument.
double parse_real(std::string_view text);

// Shortest decimal string that parses back to the same double.
std::string format_real(double x);

// Throws ValidationError naming the violated invariant.
void validate(const Scenario& s);
void validate(const SweepSpec& s);

// Applies one sweep value to a copy of the base scenario.
Scenario instantiate(const SweepSpec& spec, double value);

std::string emit_config(const Scenario& s);
std::string emit_config(const SweepSpec& s);

}  // namespace esdlab::app
