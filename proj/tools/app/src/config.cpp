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

#include "esdlab/app/config.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "esdlab/closed_form.hpp"

namespace esdlab::app {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const char* const kAxes[] = {"a", "chi", "v", "gamma", "Gamma", "gamma12", "gamma0"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

std::optional<double> plain_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return x;
}

bool parse_bool(std::string_view s) {
  if (s == "true" || s == "on" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "off" || s == "no" || s == "0") return false;
  throw std::invalid_argument("expected a boolean, got '" + std::string(s) + "'");
}

std::size_t parse_count(std::string_view s) {
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return n;
}

IntegratorMethod parse_method(std::string_view s) {
  if (s == "dopri45" || s == "dormand_prince") return IntegratorMethod::DormandPrince45;
  if (s == "rk4") return IntegratorMethod::ClassicalRK4;
  throw std::invalid_argument("unknown integrator method '" + std::string(s) + "' (dopri45, rk4)");
}

std::string_view method_name(IntegratorMethod m) {
  return m == IntegratorMethod::ClassicalRK4 ? "rk4" : "dopri45";
}

double normalize_angle(double chi) {
  double r = std::fmod(chi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // 2pi - tiny rounds to 2pi; fold that back as well.
  if (r >= kTwoPi || std::abs(r - kTwoPi) < 1e-12 || std::abs(r) < 1e-12) r = 0.0;
  return r;
}

struct Entry {
  std::string value;
  int line = 0;
};

using Section = std::map<std::string, Entry, std::less<>>;
using Document = std::map<std::string, Section, std::less<>>;

const std::map<std::string, std::vector<std::string>, std::less<>> kKnownKeys = {
    {"state", {"a", "b", "c", "d", "chi"}},
    {"system", {"omega0", "v"}},
    {"environment",
     {"model", "gamma_a", "gamma_b", "big_gamma_a", "big_gamma_b", "gamma_corr", "gamma0", "gamma", "Gamma",
      "gamma12"}},
    {"grid", {"t_max", "samples"}},
    {"engine",
     {"engine", "oracle_tol", "zero_tol", "rel_tol", "abs_tol", "max_step", "method", "hermitize_each_step",
      "trace_error_limit"}},
    {"output", {"csv_path", "json_path", "name", "source"}},
    {"sweep", {"axis", "values"}},
};

Document tokenize(std::string_view text) {
  Document doc;
  std::string current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    // Comments run to end of line unless inside quotes.
    bool quoted = false;
    char quote = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const char c = raw[i];
      if (quoted) {
        if (c == quote) quoted = false;
      } else if (c == '"' || c == '\'') {
        quoted = true;
        quote = c;
      } else if (c == '#' || c == ';') {
        raw = raw.substr(0, i);
        break;
      }
    }
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (!kKnownKeys.contains(current)) throw ParseError(line_no, "unknown section [" + current + "]");
      if (doc.contains(current)) throw ParseError(line_no, "duplicate section [" + current + "]");
      doc[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
    if (current.empty()) throw ParseError(line_no, "key outside of any section");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(unquote(trim(line.substr(eq + 1))));
    if (key.empty()) throw ParseError(line_no, "empty key");
    const auto& known = kKnownKeys.at(current);
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError(line_no, "unknown key '" + key + "' in [" + current + "]");
    }
    auto& section = doc[current];
    if (section.contains(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
    section[key] = Entry{value, line_no};
  }
  return doc;
}

// Typed accessors that turn conversion failures into ParseError with the
// offending line.
class Reader {
 public:
  explicit Reader(const Document& doc) : doc_(doc) {}

  const Entry* find(std::string_view section, std::string_view key) const {
    const auto s = doc_.find(section);
    if (s == doc_.end()) return nullptr;
    const auto e = s->second.find(key);
    return e == s->second.end() ? nullptr : &e->second;
  }

  template <class Fn>
  auto convert(const Entry& e, Fn fn) const {
    try {
      return fn(e.value);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(e.line, ex.what());
    }
  }

  bool real(std::string_view section, std::string_view key, double& out) const {
    const Entry* e = find(section, key);
    if (!e) return false;
    out = convert(*e, [](const std::string& v) { return parse_real(v); });
    return true;
  }

  int line(std::string_view section, std::string_view key) const {
    const Entry* e = find(section, key);
    return e ? e->line : 0;
  }

 private:
  const Document& doc_;
};

Scenario build_scenario(const Document& doc) {
  Reader r(doc);
  Scenario s;

  // [state]
  double a = 0.0;
  const bool has_a = r.real("state", "a", a);
  double b = 1.0, c = 1.0, d = 0.0;
  const bool has_b = r.real("state", "b", b);
  const bool has_c = r.real("state", "c", c);
  const bool has_d = r.real("state", "d", d);
  if (!has_d) d = (has_b || has_c) ? 3.0 - a - b - c : 1.0 - a;
  s.state = InitialStateParams{a, b, c, d, 0.0};
  if (!has_a && (has_b || has_c || has_d)) s.state.a = 3.0 - b - c - d;
  double chi = 0.0;
  r.real("state", "chi", chi);
  s.state.chi = normalize_angle(chi);

  // [system]
  r.real("system", "omega0", s.system.omega0);
  r.real("system", "v", s.system.v);

  // [environment]
  EnvironmentSpec& env = s.environment;
  if (const Entry* e = r.find("environment", "model")) {
    env.model = r.convert(*e, [](const std::string& v) {
      try {
        return parse_environment_model(v);
      } catch (const ModelParameterError& ex) {
        throw std::invalid_argument(ex.what());
      }
    });
  }
  double shared = 0.0;
  if (r.real("environment", "gamma", shared)) env.gamma_a = env.gamma_b = shared;
  if (r.real("environment", "Gamma", shared)) env.big_gamma_a = env.big_gamma_b = shared;
  r.real("environment", "gamma_a", env.gamma_a);
  r.real("environment", "gamma_b", env.gamma_b);
  r.real("environment", "big_gamma_a", env.big_gamma_a);
  r.real("environment", "big_gamma_b", env.big_gamma_b);
  r.real("environment", "gamma12", env.gamma_corr);
  r.real("environment", "gamma_corr", env.gamma_corr);
  r.real("environment", "gamma0", env.gamma0);

  // [grid]
  r.real("grid", "t_max", s.grid.t_max);
  if (const Entry* e = r.find("grid", "samples")) s.grid.samples = r.convert(*e, parse_count);

  // [engine]
  if (const Entry* e = r.find("engine", "engine")) {
    s.engine = r.convert(*e, [](const std::string& v) { return parse_engine(v); });
  }
  r.real("engine", "oracle_tol", s.oracle_tol);
  r.real("engine", "zero_tol", s.zero_tol);
  r.real("engine", "rel_tol", s.integrator.rel_tol);
  r.real("engine", "abs_tol", s.integrator.abs_tol);
  r.real("engine", "max_step", s.integrator.max_step);
  r.real("engine", "trace_error_limit", s.integrator.trace_error_limit);
  if (const Entry* e = r.find("engine", "method")) s.integrator.method = r.convert(*e, parse_method);
  if (const Entry* e = r.find("engine", "hermitize_each_step")) {
    s.integrator.hermitize_each_step = r.convert(*e, parse_bool);
  }

  // [output]
  if (const Entry* e = r.find("output", "csv_path")) s.output.csv_path = e->value;
  if (const Entry* e = r.find("output", "json_path")) s.output.json_path = e->value;
  if (const Entry* e = r.find("output", "name")) s.name = e->value;
  if (const Entry* e = r.find("output", "source")) s.source = e->value;
  return s;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::string_view rest = trim(text);
  if (!rest.empty() && rest.front() == '{' && rest.back() == '}') rest = trim(rest.substr(1, rest.size() - 2));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    if (item.empty()) throw std::invalid_argument("empty entry in value list");
    out.push_back(parse_real(item));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (trim(rest).empty()) throw std::invalid_argument("trailing comma in value list");
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::Numeric: return "numeric";
    case Engine::Analytic: return "analytic";
    case Engine::Compare: return "compare";
  }
  return "compare";
}

Engine parse_engine(std::string_view name) {
  if (name == "numeric") return Engine::Numeric;
  if (name == "analytic") return Engine::Analytic;
  if (name == "compare") return Engine::Compare;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "' (numeric, analytic, compare)");
}

double parse_real(std::string_view text) {
  std::string_view s = trim(unquote(trim(text)));
  if (const auto x = plain_number(s)) return *x;

  // [sign][coef][*]pi[/den]
  const auto pi = s.find("pi");
  if (pi == std::string_view::npos) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  std::string_view head = trim(s.substr(0, pi));
  std::string_view tail = trim(s.substr(pi + 2));
  double coef = 1.0;
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  if (head == "-") {
    coef = -1.0;
  } else if (!head.empty() && head != "+") {
    const auto x = plain_number(head);
    if (!x) throw std::invalid_argument("bad coefficient in '" + std::string(text) + "'");
    coef = *x;
  }
  double den = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("bad pi expression '" + std::string(text) + "'");
    const auto x = plain_number(trim(tail.substr(1)));
    if (!x || *x == 0.0) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    den = *x;
  }
  return coef * std::numbers::pi / den;
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void validate(const Scenario& s) {
  const InitialStateParams& st = s.state;
  require(finite_nonneg(st.a) && finite_nonneg(st.b) && finite_nonneg(st.c) && finite_nonneg(st.d),
          "state: a, b, c, d must be finite and >= 0");
  require(std::abs((st.a + st.b + st.c + st.d) / 3.0 - 1.0) <= 1e-12,
          "state: (a + b + c + d) / 3 must equal 1, got " + format_real((st.a + st.b + st.c + st.d) / 3.0));
  require(std::isfinite(st.chi), "state: chi must be finite");
  require(std::isfinite(s.system.omega0) && std::isfinite(s.system.v), "system: omega0 and v must be finite");

  const EnvironmentSpec& env = s.environment;
  if (env.model == EnvironmentModel::CorrelatedDecay && env.gamma_corr > std::min(env.gamma_a, env.gamma_b)) {
    throw ValidationError("environment: pole constraint violated, gamma12 = " + format_real(env.gamma_corr) +
                          " exceeds gamma = " + format_real(std::min(env.gamma_a, env.gamma_b)) +
                          " (requires gamma12 <= gamma)");
  }
  try {
    validate_environment(env);
  } catch (const Error& e) {
    throw ValidationError(std::string("environment: ") + e.what());
  }

  require(std::isfinite(s.grid.t_max) && s.grid.t_max > 0.0, "grid: t_max must be > 0");
  require(s.grid.samples >= 2, "grid: samples must be >= 2");
  require(finite_nonneg(s.oracle_tol) && s.oracle_tol > 0.0, "engine: oracle_tol must be > 0");
  require(finite_nonneg(s.zero_tol), "engine: zero_tol must be >= 0");
  const IntegratorConfig& ic = s.integrator;
  require(ic.rel_tol > 0.0 && ic.abs_tol > 0.0 && ic.max_step > 0.0 && ic.trace_error_limit > 0.0,
          "engine: integrator tolerances and max_step must be > 0");

  if (s.engine != Engine::Numeric) {
    const std::string why = closed_form::closed_form_unavailable(s.system, env);
    require(why.empty(), "engine: " + std::string(to_string(s.engine)) + " needs a closed form: " + why);
  }
}

void validate(const SweepSpec& s) {
  require(std::find(std::begin(kAxes), std::end(kAxes), s.axis) != std::end(kAxes),
          "sweep: unknown axis '" + s.axis + "' (a, chi, v, gamma, Gamma, gamma12, gamma0)");
  require(!s.values.empty(), "sweep: values must not be empty");
  for (double v : s.values) {
    try {
      validate(instantiate(s, v));
    } catch (const ValidationError& e) {
      throw ValidationError("sweep: " + s.axis + " = " + format_real(v) + ": " + e.what());
    }
  }
}

Scenario instantiate(const SweepSpec& spec, double value) {
  Scenario s = spec.base;
  EnvironmentSpec& env = s.environment;
  if (spec.axis == "a") {
    // Stay inside the one-parameter family when the base is in it.
    const bool family = s.state.b == 1.0 && s.state.c == 1.0 && s.state.d == 1.0 - s.state.a;
    s.state.a = value;
    if (family) s.state.d = 1.0 - value;
  } else if (spec.axis == "chi") {
    s.state.chi = normalize_angle(value);
  } else if (spec.axis == "v") {
    s.system.v = value;
  } else if (spec.axis == "gamma") {
    env.gamma_a = env.gamma_b = value;
  } else if (spec.axis == "Gamma") {
    env.big_gamma_a = env.big_gamma_b = value;
  } else if (spec.axis == "gamma12") {
    env.gamma_corr = value;
  } else if (spec.axis == "gamma0") {
    env.gamma0 = value;
  }
  s.name = (s.name.empty() ? std::string() : s.name + " ") + spec.axis + "=" + format_real(value);
  return s;
}

Config parse_config(std::string_view text) {
  const Document doc = tokenize(text);
  Scenario base = build_scenario(doc);
  Reader r(doc);
  if (doc.contains("sweep")) {
    SweepSpec spec;
    spec.base = std::move(base);
    const Entry* axis = r.find("sweep", "axis");
    const Entry* values = r.find("sweep", "values");
    if (!axis) throw ValidationError("sweep: missing key 'axis'");
    if (!values) throw ValidationError("sweep: missing key 'values'");
    spec.axis = axis->value;
    spec.values = r.convert(*values, [](const std::string& v) { return parse_list(v); });
    validate(spec);
    return spec;
  }
  validate(base);
  return base;
}

Scenario parse_scenario(std::string_view text) {
  Config c = parse_config(text);
  if (auto* s = std::get_if<Scenario>(&c)) return *s;
  throw ValidationError("expected a single scenario, found a [sweep] section");
}

std::string emit_config(const Scenario& s) {
  std::ostringstream os;
  const auto r = [](double x) { return format_real(x); };
  const auto quoted = [](const std::string& v) { return "\"" + v + "\""; };
  os << "[state]\n"
     << "a = " << r(s.state.a) << "\nb = " << r(s.state.b) << "\nc = " << r(s.state.c) << "\nd = " << r(s.state.d)
     << "\nchi = " << r(s.state.chi) << "\n\n";
  os << "[system]\nomega0 = " << r(s.system.omega0) << "\nv = " << r(s.system.v) << "\n\n";
  const EnvironmentSpec& e = s.environment;
  os << "[environment]\nmodel = " << to_string(e.model) << "\ngamma_a = " << r(e.gamma_a)
     << "\ngamma_b = " << r(e.gamma_b) << "\nbig_gamma_a = " << r(e.big_gamma_a)
     << "\nbig_gamma_b = " << r(e.big_gamma_b) << "\ngamma_corr = " << r(e.gamma_corr)
     << "\ngamma0 = " << r(e.gamma0) << "\n\n";
  os << "[grid]\nt_max = " << r(s.grid.t_max) << "\nsamples = " << s.grid.samples << "\n\n";
  const IntegratorConfig& ic = s.integrator;
  os << "[engine]\nengine = " << to_string(s.engine) << "\noracle_tol = " << r(s.oracle_tol)
     << "\nzero_tol = " << r(s.zero_tol) << "\nrel_tol = " << r(ic.rel_tol) << "\nabs_tol = " << r(ic.abs_tol)
     << "\nmax_step = " << r(ic.max_step) << "\nmethod = " << method_name(ic.method)
     << "\nhermitize_each_step = " << (ic.hermitize_each_step ? "true" : "false")
     << "\ntrace_error_limit = " << r(ic.trace_error_limit) << "\n\n";
  os << "[output]\ncsv_path = " << quoted(s.output.csv_path) << "\njson_path = " << quoted(s.output.json_path)
     << "\nname = " << quoted(s.name) << "\nsource = " << quoted(s.source) << "\n";
  return os.str();
}

std::string emit_config(const SweepSpec& s) {
  std::string out = emit_config(s.base);
  out += "\n[sweep]\naxis = " + s.axis + "\nvalues = ";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += ", ";
    out += format_real(s.values[i]);
  }
  out += "\n";
  return out;
}

}  // namespace esdlab::app
