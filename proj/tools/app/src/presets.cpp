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

#include "esdlab/app/presets.hpp"

#include <numbers>

namespace esdlab::app {

namespace {

constexpr double kPi = std::numbers::pi;

Scenario base(std::string name, EnvironmentModel model, double a, double chi, double v) {
  Scenario s;
  s.name = std::move(name);
  s.state = InitialStateParams::one_parameter(a, chi);
  s.system.v = v;
  s.environment.model = model;
  s.grid.t_max = 5.0;
  return s;
}

Scenario dissipative(std::string name, double a, double chi, double v, double gamma) {
  Scenario s = base(std::move(name), EnvironmentModel::Dissipative, a, chi, v);
  s.environment.gamma_a = s.environment.gamma_b = gamma;
  return s;
}

Scenario dephasing(std::string name, double a, double chi, double v) {
  Scenario s = base(std::move(name), EnvironmentModel::PureDephasing, a, chi, v);
  s.environment.big_gamma_a = s.environment.big_gamma_b = 1.0;
  return s;
}

Scenario correlated_decay(std::string name, double a, double chi, double v, double g12) {
  Scenario s = base(std::move(name), EnvironmentModel::CorrelatedDecay, a, chi, v);
  s.environment.gamma_a = s.environment.gamma_b = 1.0;
  s.environment.gamma_corr = g12;
  return s;
}

Scenario correlated_dephasing(std::string name, double a, double chi, double v, double g0) {
  Scenario s = base(std::move(name), EnvironmentModel::CorrelatedDephasing, a, chi, v);
  s.environment.big_gamma_a = s.environment.big_gamma_b = 1.0;
  s.environment.gamma0 = g0;
  return s;
}

const char* chi_label(double chi) { return chi == kPi / 4 ? "pi/4" : "pi/2"; }

std::vector<Scenario> fig2() {
  const char* src =
      "caption: b = c = |z| = 1, chi in {pi/4, pi/2}; a = 0.4 and v = 5 gamma from the text; "
      "v = 0 curve from the inset discussion; gamma = 1 sets the time unit";
  std::vector<Scenario> out;
  for (double chi : {kPi / 4, kPi / 2}) {
    out.push_back(dissipative(std::string("fig2 chi=") + chi_label(chi) + " v=5", 0.4, chi, 5.0, 1.0));
  }
  out.push_back(dissipative("fig2 v=0 (inset)", 0.4, kPi / 2, 0.0, 1.0));
  for (auto& s : out) s.source = src;
  return out;
}

std::vector<Scenario> fig3(double a, const char* panel) {
  const std::string src = std::string("caption: gamma = 0, b = c = |z| = 1, chi in {pi/4, pi/2}; panel (") + panel +
                          ") takes a = " + (a == 0.2 ? "0.2" : "0.4") +
                          " following the text order; caption gives no v, v = 1 sets the time unit";
  std::vector<Scenario> out;
  for (double chi : {kPi / 4, kPi / 2}) {
    Scenario s = dissipative(std::string("fig3") + panel + " chi=" + chi_label(chi), a, chi, 1.0, 0.0);
    s.source = src;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> fig5() {
  std::vector<Scenario> out;
  for (double chi : {kPi / 4, kPi / 2}) {
    Scenario s = dephasing(std::string("fig5 chi=") + chi_label(chi), 0.2, chi, 4.0);
    s.source = "caption: v/Gamma = 4, chi in {pi/4, pi/2}, b = c = |z| = 1; a = 0.2 from the text";
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> fig6_7(double a, const char* fig) {
  const std::string src = std::string("caption: a = ") + (a == 0.2 ? "0.2" : "0.4") +
                          ", non-interacting (v = 0), Gamma/gamma in {0, 0.8}; chi in {pi/4, pi/2} from the text";
  std::vector<Scenario> out;
  for (double chi : {kPi / 4, kPi / 2}) {
    out.push_back(correlated_decay(std::string(fig) + " chi=" + chi_label(chi) + " gamma12=0.8", a, chi, 0.0, 0.8));
  }
  out.push_back(correlated_decay(std::string(fig) + " gamma12=0", a, kPi / 4, 0.0, 0.0));
  for (auto& s : out) s.source = src;
  return out;
}

std::vector<Scenario> fig8_9(double a, const char* fig) {
  const std::string src = std::string("caption: Gamma/gamma = 0.8, v/gamma = 5, b = c = |z| = 1; a = ") +
                          (a == 0.2 ? "0.2" : "0.4") + " and chi in {pi/4, pi/2} from the text";
  std::vector<Scenario> out;
  for (double chi : {kPi / 4, kPi / 2}) {
    Scenario s = correlated_decay(std::string(fig) + " chi=" + chi_label(chi), a, chi, 5.0, 0.8);
    s.source = src;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> fig11() {
  std::vector<Scenario> out;
  for (double g0 : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    Scenario s = correlated_dephasing("fig11 gamma0=" + format_real(g0), 0.2, kPi / 4, 0.0, g0);
    s.source =
        "caption: a = 0.2, b = c = |z| = 1, non-interacting; the caption lists no gamma0 values, "
        "{0, 0.2, 0.5, 0.8, 1} Gamma span no correlation up to the decoherence-free limit";
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> fig12() {
  std::vector<Scenario> out;
  for (double v : {5.0, 0.0}) {
    Scenario s = correlated_dephasing("fig12 v=" + format_real(v), 0.2, kPi / 4, v, 0.2);
    s.source = "caption: v/Gamma = 5 (red curve v = 0), a = 0.2, chi = pi/4; gamma0 = 0.2 Gamma from the text";
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> fig13() {
  std::vector<Scenario> out;
  for (double g0 : {0.5, 0.8}) {
    Scenario s = correlated_dephasing("fig13 gamma0=" + format_real(g0), 0.2, kPi / 4, 5.0, g0);
    s.source =
        "caption: parameters of fig12 with higher correlated dephasing; the caption gives no values, "
        "gamma0 in {0.5, 0.8} Gamma chosen";
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> fig14() {
  Scenario s = correlated_dephasing("fig14", 0.2, kPi / 2, 5.0, 0.2);
  s.source = "caption: a = 0.2, chi = pi/2, v/Gamma = 5; gamma0 = 0.2 Gamma from the text";
  return {s};
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2", "fig3a", "fig3b", "fig5",  "fig6",  "fig7",
                                                 "fig8", "fig9",  "fig11", "fig12", "fig13", "fig14"};
  return names;
}

std::vector<Scenario> figure_preset(std::string_view name) {
  if (name == "fig2") return fig2();
  if (name == "fig3a") return fig3(0.2, "a");
  if (name == "fig3b") return fig3(0.4, "b");
  if (name == "fig5") return fig5();
  if (name == "fig6") return fig6_7(0.2, "fig6");
  if (name == "fig7") return fig6_7(0.4, "fig7");
  if (name == "fig8") return fig8_9(0.2, "fig8");
  if (name == "fig9") return fig8_9(0.4, "fig9");
  if (name == "fig11") return fig11();
  if (name == "fig12") return fig12();
  if (name == "fig13") return fig13();
  if (name == "fig14") return fig14();
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw UnknownPreset("unknown preset '" + std::string(name) + "' (" + known + ")");
}

}  // namespace esdlab::app
