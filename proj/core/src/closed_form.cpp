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

#include "esdlab/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "esdlab/errors.hpp"

namespace esdlab::closed_form {

namespace {

using std::exp;
using std::sqrt;

constexpr Complex kI{0.0, 1.0};
constexpr double kXFormTol = 1e-10;
constexpr double kSeriesTol = 1e-6;

void require_x_form(const DensityMatrix& rho0) {
  if (!rho0.is_x_form(kXFormTol)) {
    throw FormError("closed-form propagator requires an X-form initial state");
  }
}

void require_rate(double rate, const char* name) {
  if (!std::isfinite(rate) || rate < 0.0) {
    throw DomainError(std::string(name) + " must be finite and >= 0");
  }
}

void require_family(double a) {
  if (!std::isfinite(a) || a < 0.0 || a > 1.0) {
    throw DomainError("closed-form concurrence requires a in [0, 1] (b = c = 1, d = 1 - a)");
  }
}

void require_correlated_decay(double gamma, double gamma12) {
  require_rate(gamma, "gamma");
  require_rate(gamma12, "gamma12");
  if (gamma12 - gamma > kPoleBand * gamma) {
    throw DomainError("correlated decay requires gamma12 <= gamma");
  }
}

// expm1 for complex arguments.
Complex complex_expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = exp(x) * std::sin(y);
  return {re, im};
}

// (e^{z t} - 1) / z with limit t.
Complex complex_expm1_ratio(Complex z, double t) {
  const Complex zt = z * t;
  if (std::abs(zt) < 1e-5) {
    return t * (1.0 + zt / 2.0 + zt * zt / 6.0 + zt * zt * zt / 24.0);
  }
  return complex_expm1(zt) / z;
}

// Populations are closed through the trace: whatever leaves 11, 22, 33 ends in 44.
void close_trace(const DensityMatrix& rho0, DensityMatrix& rho) {
  const Complex lost = (rho0(0, 0) - rho(0, 0)) + (rho0(1, 1) - rho(1, 1)) + (rho0(2, 2) - rho(2, 2));
  rho(3, 3) = rho0(3, 3) + lost;
}

// Shared by the (correlated) dephasing propagators. coherence_rate damps
// rho_23, outer_rate damps rho_14.
DensityMatrix dephasing_solution(const DensityMatrix& rho0, double coherence_rate, double outer_rate, double v,
                                 double t) {
  require_x_form(rho0);
  if (t == 0.0) return rho0;
  const double g = coherence_rate;
  // rho_22 - rho_33 and Im rho_23 rotate with eigenvalues -g/2 +- i sqrt(r).
  const double r = 4.0 * v * v - 0.25 * g * g;
  const double alpha = 0.5 * g;
  const double pop_osc = damped_oscillation(alpha, r, 1.0, 0.5 * g, t);   // K (cos + g/(4W) sin)
  const double coh_osc = damped_oscillation(alpha, r, 1.0, -0.5 * g, t);  // K (cos - g/(4W) sin)
  const double cross = damped_oscillation(alpha, r, 0.0, v, t);           // K v sin / (2W)

  const Complex p22 = rho0(1, 1);
  const Complex p33 = rho0(2, 2);
  const Complex r23 = rho0(1, 2);
  const Complex r32 = rho0(2, 1);

  DensityMatrix rho;
  rho(0, 0) = rho0(0, 0);
  rho(1, 1) = 0.5 * p22 * (1.0 + pop_osc) + 0.5 * p33 * (1.0 - pop_osc) + kI * (r23 - r32) * cross;
  rho(2, 2) = 0.5 * p22 * (1.0 - pop_osc) + 0.5 * p33 * (1.0 + pop_osc) - kI * (r23 - r32) * cross;
  rho(1, 2) = 0.5 * (r23 + r32) * exp(-g * t) + 0.5 * (r23 - r32) * coh_osc + kI * (p22 - p33) * cross;
  rho(2, 1) = std::conj(rho(1, 2));
  rho(0, 3) = rho0(0, 3) * exp(-outer_rate * t);
  rho(3, 0) = std::conj(rho(0, 3));
  close_trace(rho0, rho);
  return rho;
}

// Correlated decay in the X block, with coupling phase 2vt (v = 0 allowed).
DensityMatrix correlated_decay_solution(const DensityMatrix& rho0, double gamma, double gamma12, double v,
                                        double t) {
  require_x_form(rho0);
  require_correlated_decay(gamma, gamma12);
  if (t == 0.0) return rho0;

  const double e1 = exp(-gamma * t);
  // e^{-gamma t} cosh / sinh (gamma12 t) without overflow-prone products.
  const double slow = exp(-(gamma - gamma12) * t);
  const double fast = exp(-(gamma + gamma12) * t);
  const double ech = 0.5 * (slow + fast);
  const double esh = 0.5 * (slow - fast);
  const double c2v = std::cos(2.0 * v * t);
  const double s2v = std::sin(2.0 * v * t);

  const Complex p11 = rho0(0, 0);
  const Complex p22 = rho0(1, 1);
  const Complex p33 = rho0(2, 2);
  const Complex r23 = rho0(1, 2);
  const Complex r32 = rho0(2, 1);
  const Complex sum = p22 + p33;
  const Complex diff = p22 - p33;
  const Complex coh_sum = r23 + r32;
  const Complex coh_diff = r23 - r32;

  // Population fed from |1> into the symmetric (rate gamma + gamma12) and
  // antisymmetric (rate gamma - gamma12) single-excitation states.
  const double e2 = exp(-2.0 * gamma * t);
  const Complex feed_sym = p11 * (gamma + gamma12) * e2 * expm1_ratio(gamma - gamma12, t);
  const Complex feed_anti = p11 * (gamma - gamma12) * e2 * expm1_ratio(gamma + gamma12, t);

  DensityMatrix rho;
  rho(0, 0) = p11 * e2;
  const Complex common = 0.5 * (sum * ech - coh_sum * esh) + 0.5 * (feed_sym + feed_anti);
  const Complex exchange = 0.5 * e1 * (diff * c2v + kI * coh_diff * s2v);
  rho(1, 1) = common + exchange;
  rho(2, 2) = common - exchange;
  rho(1, 2) = 0.5 * (coh_sum * ech - sum * esh) + 0.5 * e1 * (coh_diff * c2v + kI * diff * s2v) +
              0.5 * (feed_sym - feed_anti);
  rho(2, 1) = std::conj(rho(1, 2));
  rho(0, 3) = rho0(0, 3) * e1;
  rho(3, 0) = std::conj(rho(0, 3));
  close_trace(rho0, rho);
  return rho;
}

double family_floor(double a) {
  return sqrt(a * (1.0 - a));
}

}  // namespace

TrigPair trig_continued(double radicand, double t) {
  const double u = radicand * t * t;
  if (std::abs(u) < kSeriesTol) {
    return {1.0 - u / 2.0 + u * u / 24.0 - u * u * u / 720.0,
            t * (1.0 - u / 6.0 + u * u / 120.0 - u * u * u / 5040.0)};
  }
  if (radicand > 0.0) {
    const double q = sqrt(radicand);
    return {std::cos(q * t), std::sin(q * t) / q};
  }
  const double q = sqrt(-radicand);
  return {std::cosh(q * t), std::sinh(q * t) / q};
}

double damped_oscillation(double alpha, double radicand, double kc, double ks, double t) {
  const double u = radicand * t * t;
  if (radicand >= 0.0 || std::abs(u) < kSeriesTol) {
    const TrigPair p = trig_continued(radicand, t);
    return exp(-alpha * t) * (kc * p.cos_term + ks * p.sin_over_freq);
  }
  const double q = sqrt(-radicand);
  return 0.5 * exp((q - alpha) * t) * (kc + ks / q) + 0.5 * exp(-(q + alpha) * t) * (kc - ks / q);
}

double expm1_ratio(double eps, double t) {
  const double x = eps * t;
  if (std::abs(x) < 1e-5) return t * (1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0);
  return std::expm1(x) / eps;
}

double zeta(double gamma, double gamma12, double t) {
  return exp(-gamma * t) *
         ((gamma + gamma12) * expm1_ratio(gamma - gamma12, t) - (gamma - gamma12) * expm1_ratio(gamma + gamma12, t));
}

double kappa(double a, double chi, double gamma, double gamma12, double t) {
  const double slow = exp(-(gamma - gamma12) * t);
  const double fast = exp(-(gamma + gamma12) * t);
  const double ech = 0.5 * (slow + fast);
  const double esh = 0.5 * (slow - fast);
  const double feed = 1.0 + (gamma + gamma12) * expm1_ratio(gamma - gamma12, t) +
                      (gamma - gamma12) * expm1_ratio(gamma + gamma12, t);
  return a / 3.0 * exp(-2.0 * gamma * t) * feed + 2.0 / 3.0 * (ech - std::cos(chi) * esh);
}

AnalyticIntermediates intermediates(const IntermediateInputs& in) {
  AnalyticIntermediates out;
  out.w = sqrt(-std::expm1(-in.gamma * in.t));
  const double big_gamma = 0.5 * (in.big_gamma_a + in.big_gamma_b);
  out.tau = big_gamma * in.t;
  const double g = 0.25 * (in.big_gamma_a + in.big_gamma_b);
  out.omega = std::sqrt(Complex(in.v * in.v - g * g, 0.0));
  if (big_gamma > 0.0) {
    const double ratio = 2.0 * in.v / big_gamma;
    out.omega1 = std::sqrt(Complex(ratio * ratio - 1.0, 0.0));
  }
  const double gp = 0.25 * (in.big_gamma_a + in.big_gamma_b - 2.0 * in.gamma0);
  out.omega_prime = std::sqrt(Complex(in.v * in.v - gp * gp, 0.0));
  out.zeta = zeta(in.gamma, in.gamma12, in.t);
  out.kappa = kappa(in.a, in.chi, in.gamma, in.gamma12, in.t);
  return out;
}

DensityMatrix rho_dissipative(const DensityMatrix& rho0, double gamma, double v, double t, double omega0) {
  require_rate(gamma, "gamma");
  if (t == 0.0) return rho0;
  const double e1 = exp(-gamma * t);
  const double e2 = exp(-2.0 * gamma * t);
  const double c2v = std::cos(2.0 * v * t);
  const double s2v = std::sin(2.0 * v * t);
  const Complex phase1 = std::polar(1.0, -omega0 * t);
  const Complex phase2 = std::polar(1.0, -2.0 * omega0 * t);

  const Complex p11 = rho0(0, 0);
  const Complex p22 = rho0(1, 1);
  const Complex p33 = rho0(2, 2);
  const Complex r23 = rho0(1, 2);
  const Complex r32 = rho0(2, 1);

  DensityMatrix rho;
  rho(0, 0) = p11 * e2;
  // |1> decays into |2> and |3> at rate gamma each.
  const Complex feed = p11 * (e1 - e2);
  rho(1, 1) = 0.5 * p22 * e1 * (1.0 + c2v) + 0.5 * p33 * e1 * (1.0 - c2v) + feed +
              0.5 * kI * (r23 - r32) * e1 * s2v;
  rho(2, 2) = 0.5 * p22 * e1 * (1.0 - c2v) + 0.5 * p33 * e1 * (1.0 + c2v) + feed -
              0.5 * kI * (r23 - r32) * e1 * s2v;
  rho(1, 2) = 0.5 * kI * (p22 - p33) * s2v * e1 + 0.5 * r23 * e1 * (1.0 + c2v) + 0.5 * r32 * e1 * (1.0 - c2v);
  rho(2, 1) = std::conj(rho(1, 2));

  // Two-excitation / one-excitation coherences.
  const double e32 = exp(-1.5 * gamma * t);
  const double cv = std::cos(v * t);
  const double sv = std::sin(v * t);
  const Complex r12 = rho0(0, 1);
  const Complex r13 = rho0(0, 2);
  rho(0, 1) = phase1 * e32 * (r12 * cv + kI * r13 * sv);
  rho(0, 2) = phase1 * e32 * (r13 * cv + kI * r12 * sv);
  rho(0, 3) = phase2 * rho0(0, 3) * e1;

  // One-excitation / ground coherences, fed by rho_12 and rho_13. Work with
  // U = rho_24 + rho_34 and W = rho_24 - rho_34, which decouple.
  const Complex u0 = r12 + r13;
  const Complex w0 = r12 - r13;
  const Complex big_u0 = rho0(1, 3) + rho0(2, 3);
  const Complex big_w0 = rho0(1, 3) - rho0(2, 3);
  const Complex lambda_u = Complex(-1.5 * gamma, v);
  const Complex lambda_big_u = Complex(-0.5 * gamma, -v);
  const Complex lambda_w = Complex(-1.5 * gamma, -v);
  const Complex lambda_big_w = Complex(-0.5 * gamma, v);
  const Complex big_u = std::exp(lambda_big_u * t) *
                        (big_u0 + gamma * u0 * complex_expm1_ratio(lambda_u - lambda_big_u, t));
  const Complex big_w = std::exp(lambda_big_w * t) *
                        (big_w0 - gamma * w0 * complex_expm1_ratio(lambda_w - lambda_big_w, t));
  rho(1, 3) = phase1 * 0.5 * (big_u + big_w);
  rho(2, 3) = phase1 * 0.5 * (big_u - big_w);

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) rho(i, j) = std::conj(rho(j, i));
  close_trace(rho0, rho);
  return rho;
}

DensityMatrix rho_dephasing(const DensityMatrix& rho0, double big_gamma_a, double big_gamma_b, double v, double t) {
  require_rate(big_gamma_a, "Gamma_a");
  require_rate(big_gamma_b, "Gamma_b");
  const double g = big_gamma_a + big_gamma_b;
  return dephasing_solution(rho0, g, g, v, t);
}

DensityMatrix rho_correlated_decay(const DensityMatrix& rho0, double gamma, double gamma12, double t) {
  return correlated_decay_solution(rho0, gamma, gamma12, 0.0, t);
}

DensityMatrix rho_correlated_decay_interacting(const DensityMatrix& rho0, double gamma, double gamma12, double v,
                                               double t) {
  return correlated_decay_solution(rho0, gamma, gamma12, v, t);
}

DensityMatrix rho_correlated_dephasing(const DensityMatrix& rho0, double big_gamma_a, double big_gamma_b,
                                       double gamma0, double t) {
  require_rate(big_gamma_a, "Gamma_a");
  require_rate(big_gamma_b, "Gamma_b");
  require_rate(gamma0, "gamma0");
  require_x_form(rho0);
  const double coherence_rate = big_gamma_a + big_gamma_b - 2.0 * gamma0;
  if (coherence_rate < 0.0) throw DomainError("correlated dephasing requires 2 gamma0 <= Gamma_a + Gamma_b");
  if (t == 0.0) return rho0;
  DensityMatrix rho = rho0;
  rho(1, 2) = rho0(1, 2) * exp(-coherence_rate * t);
  rho(2, 1) = std::conj(rho(1, 2));
  rho(0, 3) = rho0(0, 3) * exp(-(big_gamma_a + big_gamma_b + 2.0 * gamma0) * t);
  rho(3, 0) = std::conj(rho(0, 3));
  return rho;
}

DensityMatrix rho_correlated_dephasing_interacting(const DensityMatrix& rho0, double big_gamma_a,
                                                   double big_gamma_b, double gamma0, double v, double t) {
  require_rate(big_gamma_a, "Gamma_a");
  require_rate(big_gamma_b, "Gamma_b");
  require_rate(gamma0, "gamma0");
  const double coherence_rate = big_gamma_a + big_gamma_b - 2.0 * gamma0;
  if (coherence_rate < 0.0) throw DomainError("correlated dephasing requires 2 gamma0 <= Gamma_a + Gamma_b");
  return dephasing_solution(rho0, coherence_rate, big_gamma_a + big_gamma_b + 2.0 * gamma0, v, t);
}

double concurrence_closed_system(double a, double chi, double v, double t) {
  require_family(a);
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  const double osc = std::cos(2.0 * v * t);
  return 2.0 / 3.0 * (sqrt(c * c + s * s * osc * osc) - family_floor(a));
}

double concurrence_dissipative(double a, double chi, double v, double gamma, double t) {
  require_family(a);
  require_rate(gamma, "gamma");
  if (gamma == 0.0) return concurrence_closed_system(a, chi, v, t);
  const double w2 = -std::expm1(-gamma * t);
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  const double osc = std::cos(2.0 * v * t);
  return 2.0 / 3.0 * exp(-gamma * t) *
         (sqrt(c * c + s * s * osc * osc) - sqrt(a * (1.0 - a + 2.0 * w2 + w2 * w2 * a)));
}

double concurrence_dephasing(double a, double chi, double v, double big_gamma, double t) {
  require_family(a);
  require_rate(big_gamma, "Gamma");
  if (big_gamma == 0.0) return concurrence_closed_system(a, chi, v, t);
  const double tau = big_gamma * t;
  const double ratio = 2.0 * v / big_gamma;
  // e^{-tau} (cos(W1 tau) - sin(W1 tau) / W1), W1^2 = (2v/Gamma)^2 - 1.
  const double osc = damped_oscillation(1.0, ratio * ratio - 1.0, 1.0, -1.0, tau);
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  return 2.0 / 3.0 * (sqrt(exp(-4.0 * tau) * c * c + s * s * osc * osc) - family_floor(a));
}

double concurrence_correlated_decay(double a, double chi, double gamma, double gamma12, double v, double t) {
  require_family(a);
  require_correlated_decay(gamma, gamma12);
  const double slow = exp(-(gamma - gamma12) * t);
  const double fast = exp(-(gamma + gamma12) * t);
  const double ech = 0.5 * (slow + fast);
  const double esh = 0.5 * (slow - fast);
  const double e1 = exp(-gamma * t);
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  const double osc = std::cos(2.0 * v * t);
  // e^{-gamma t} x the bracket {cos(chi) cosh - sinh + a zeta / 2}.
  const double real_part = c * ech - esh + 0.5 * a * e1 * zeta(gamma, gamma12, t);
  const double imag_part = e1 * s * osc;
  const double excited = std::max(0.0, 1.0 - kappa(a, chi, gamma, gamma12, t));
  return 2.0 / 3.0 * (sqrt(real_part * real_part + imag_part * imag_part) - e1 * sqrt(3.0 * a * excited));
}

double concurrence_correlated_dephasing(double a, double chi, double big_gamma, double gamma0, double v, double t) {
  require_family(a);
  require_rate(big_gamma, "Gamma");
  require_rate(gamma0, "gamma0");
  if (gamma0 > big_gamma) throw DomainError("correlated dephasing requires gamma0 <= Gamma");
  const double d = big_gamma - gamma0;
  if (v == 0.0) return 2.0 / 3.0 * (exp(-2.0 * d * t) - family_floor(a));
  // e^{-d t} (cos(W' t) - d sin(W' t) / W'), W'^2 = 4 v^2 - d^2.
  const double osc = damped_oscillation(d, 4.0 * v * v - d * d, 1.0, -d, t);
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  return 2.0 / 3.0 * (sqrt(exp(-4.0 * d * t) * c * c + s * s * osc * osc) - family_floor(a));
}

std::string closed_form_unavailable(const SystemParams& params, const EnvironmentSpec& env) {
  try {
    validate_environment(env);
  } catch (const Error& e) {
    return e.what();
  }
  switch (env.model) {
    case EnvironmentModel::Dissipative:
      if (env.gamma_a != env.gamma_b) return "dissipative closed form assumes gamma_a = gamma_b";
      break;
    case EnvironmentModel::CorrelatedDecay:
      if (env.gamma_a != env.gamma_b) return "correlated-decay closed form assumes gamma_a = gamma_b";
      break;
    case EnvironmentModel::PureDephasing:
    case EnvironmentModel::CorrelatedDephasing:
      break;
  }
  if (!std::isfinite(params.v) || !std::isfinite(params.omega0)) return "v and omega0 must be finite";
  return {};
}

DensityMatrix propagate(const DensityMatrix& rho0, const SystemParams& params, const EnvironmentSpec& env,
                        double t) {
  if (const std::string why = closed_form_unavailable(params, env); !why.empty()) throw DomainError(why);
  if (t == 0.0) return rho0;
  DensityMatrix rho;
  switch (env.model) {
    case EnvironmentModel::Dissipative:
      return rho_dissipative(rho0, env.gamma_a, params.v, t, params.omega0);
    case EnvironmentModel::PureDephasing:
      rho = rho_dephasing(rho0, env.big_gamma_a, env.big_gamma_b, params.v, t);
      break;
    case EnvironmentModel::CorrelatedDecay:
      rho = params.v == 0.0 ? rho_correlated_decay(rho0, env.gamma_a, env.gamma_corr, t)
                            : rho_correlated_decay_interacting(rho0, env.gamma_a, env.gamma_corr, params.v, t);
      break;
    case EnvironmentModel::CorrelatedDephasing:
      rho = params.v == 0.0
                ? rho_correlated_dephasing(rho0, env.big_gamma_a, env.big_gamma_b, env.gamma0, t)
                : rho_correlated_dephasing_interacting(rho0, env.big_gamma_a, env.big_gamma_b, env.gamma0, params.v,
                                                       t);
      break;
  }
  // omega0 only rotates the |1><4| coherence of an X state.
  if (params.omega0 != 0.0) {
    rho(0, 3) *= std::polar(1.0, -2.0 * params.omega0 * t);
    rho(3, 0) = std::conj(rho(0, 3));
  }
  return rho;
}

Trajectory analytic_trajectory(const DensityMatrix& rho0, const SystemParams& params, const EnvironmentSpec& env,
                               std::span<const double> t_grid) {
  std::vector<DensityMatrix> states;
  states.reserve(t_grid.size());
  for (double t : t_grid) states.push_back(propagate(rho0, params, env, t));
  return make_trajectory(std::vector<double>(t_grid.begin(), t_grid.end()), std::move(states));
}

CtildeEvaluator ctilde_evaluator(const DensityMatrix& rho0, const SystemParams& params, const EnvironmentSpec& env) {
  if (const std::string why = closed_form_unavailable(params, env); !why.empty()) throw DomainError(why);
  return [rho0, params, env](double t) { return signed_concurrence(propagate(rho0, params, env, t)); };
}

}  // namespace esdlab::closed_form
