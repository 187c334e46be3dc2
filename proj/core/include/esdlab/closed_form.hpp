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

#include <complex>
#include <span>
#include <string>

#include "esdlab/entanglement.hpp"
#include "esdlab/qstate.hpp"
#include "esdlab/trajectory.hpp"

// Exact propagators and concurrence expressions for the four environment
// models. All evaluators take plain scalars; rates share the units of 1/t.
//
// Several printed forms of these solutions contain misprints. The versions
// here were re-derived from the master equation and are cross-checked against
// the numerical integrator in the test suite:
//  * correlated decay: the feeding terms pair (g + G12)/(g - G12) with
//    e^{-G12 t}; the sinh coefficient of rho_23 is 1/2 (also with coupling);
//    the coupling term of rho_22/rho_33 carries a factor i.
//  * dephasing with coupling: the rho_23 oscillation is cos - (G/4W) sin.
//  * dissipative rho_24/rho_34: feeding from rho_13/rho_12 at rates 3g/2 and
//    g/2 (no e^{-2gt} term).
//  * correlated decay concurrence: the zeta term enters as a zeta / 2.
//  * correlated dephasing with coupling: W' = sqrt(4v^2 - (G - G0)^2).
//  * closed system (gamma = 0): cos^2(2vt), the gamma -> 0 limit.
namespace esdlab::closed_form {

// cos(sqrt(r) t) and sin(sqrt(r) t) / sqrt(r), continued to cosh/sinh for
// r < 0 and evaluated by series near r t^2 = 0.
struct TrigPair {
  double cos_term = 1.0;
  double sin_over_freq = 0.0;
};
TrigPair trig_continued(double radicand, double t);

// e^{-alpha t} (kc cos(sqrt(r) t) + ks sin(sqrt(r) t) / sqrt(r)), evaluated
// without cancellation between growing and decaying exponentials.
double damped_oscillation(double alpha, double radicand, double kc, double ks, double t);

// expm1(eps t) / eps with its limit t at eps = 0.
double expm1_ratio(double eps, double t);

// Relative width of the band around gamma12 = gamma in which the
// correlated-decay coefficients switch to their series limit.
inline constexpr double kPoleBand = 1e-6;

struct AnalyticIntermediates {
  double w = 0.0;                // sqrt(1 - e^{-gamma t})
  double tau = 0.0;              // Gamma t
  std::complex<double> omega;    // sqrt(v^2 - ((Gamma_a + Gamma_b)/4)^2)
  std::complex<double> omega1;   // sqrt((2v/Gamma)^2 - 1)
  std::complex<double> omega_prime;  // sqrt(v^2 - ((Gamma_a + Gamma_b - 2 gamma0)/4)^2)
  double zeta = 0.0;
  double kappa = 0.0;
};

struct IntermediateInputs {
  double a = 0.0;
  double chi = 0.0;
  double gamma = 0.0;
  double gamma12 = 0.0;
  double big_gamma_a = 0.0;
  double big_gamma_b = 0.0;
  double gamma0 = 0.0;
  double v = 0.0;
  double t = 0.0;
};
AnalyticIntermediates intermediates(const IntermediateInputs& in);

double zeta(double gamma, double gamma12, double t);
double kappa(double a, double chi, double gamma, double gamma12, double t);

// ---- density-matrix propagators (rho0 returned unchanged at t = 0) ----

// Independent decay at equal rates gamma, all 16 elements. omega0 only
// contributes phases to coherences between excitation manifolds.
DensityMatrix rho_dissipative(const DensityMatrix& rho0, double gamma, double v, double t, double omega0 = 0.0);

// Pure dephasing; rho0 must be X-form (FormError otherwise).
DensityMatrix rho_dephasing(const DensityMatrix& rho0, double big_gamma_a, double big_gamma_b, double v, double t);

// Correlated decay without coupling; 0 <= gamma12 <= gamma, rho0 X-form.
DensityMatrix rho_correlated_decay(const DensityMatrix& rho0, double gamma, double gamma12, double t);

// Correlated decay with coupling v.
DensityMatrix rho_correlated_decay_interacting(const DensityMatrix& rho0, double gamma, double gamma12, double v,
                                               double t);

// Correlated dephasing without coupling; 2 gamma0 <= Gamma_a + Gamma_b.
DensityMatrix rho_correlated_dephasing(const DensityMatrix& rho0, double big_gamma_a, double big_gamma_b,
                                       double gamma0, double t);

DensityMatrix rho_correlated_dephasing_interacting(const DensityMatrix& rho0, double big_gamma_a,
                                                   double big_gamma_b, double gamma0, double v, double t);

// ---- signed concurrence C~ for b = c = |z| = 1, d = 1 - a, a in [0, 1] ----

double concurrence_closed_system(double a, double chi, double v, double t);
double concurrence_dissipative(double a, double chi, double v, double gamma, double t);
// Equal dephasing rates Gamma_a = Gamma_b = Gamma.
double concurrence_dephasing(double a, double chi, double v, double big_gamma, double t);
double concurrence_correlated_decay(double a, double chi, double gamma, double gamma12, double v, double t);
double concurrence_correlated_dephasing(double a, double chi, double big_gamma, double gamma0, double v, double t);

// ---- dispatch on a scenario ----

// Empty when a closed form covers (params, env); otherwise the reason.
std::string closed_form_unavailable(const SystemParams& params, const EnvironmentSpec& env);

// Closed-form rho(t). Throws DomainError when closed_form_unavailable() is non-empty.
DensityMatrix propagate(const DensityMatrix& rho0, const SystemParams& params, const EnvironmentSpec& env, double t);

Trajectory analytic_trajectory(const DensityMatrix& rho0, const SystemParams& params, const EnvironmentSpec& env,
                               std::span<const double> t_grid);

// C~(t) from the closed-form state, for edge refinement in analyze().
CtildeEvaluator ctilde_evaluator(const DensityMatrix& rho0, const SystemParams& params, const EnvironmentSpec& env);

}  // namespace esdlab::closed_form
