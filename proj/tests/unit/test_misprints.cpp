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

// Arbitration of printed closed forms that disagree with the equations of
// motion. Each test evaluates the literal printed expression next to the
// implemented one and lets the numeric integrator decide.

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "esdlab/closed_form.hpp"
#include "esdlab/entanglement.hpp"
#include "esdlab/liouville.hpp"
#include "oracle.hpp"
#include "printed.hpp"

namespace esdlab {
namespace {

namespace cf = closed_form;
namespace pr = testing::printed;
using testing::kPi;

constexpr double kAgree = 1e-6;
constexpr double kDisagree = 1e-4;

DensityMatrix family(double a, double chi) { return build_initial_density(InitialStateParams::one_parameter(a, chi)); }

struct Reference {
  std::vector<double> t;
  Trajectory traj;
};

Reference numeric(const DensityMatrix& rho0, const SystemParams& p, const EnvironmentSpec& env, double t_max) {
  Reference r;
  r.t = uniform_grid(t_max, 201);
  r.traj = evolve(rho0, p, env, r.t);
  return r;
}

// Largest |f(t) - C~_numeric(t)|; samples where f is not finite count as
// disagreement.
double worst_ctilde(const Reference& r, const std::function<double(double)>& f) {
  double w = 0.0;
  for (std::size_t k = 0; k < r.t.size(); ++k) {
    const double x = f(r.t[k]);
    w = std::max(w, std::isfinite(x) ? std::abs(x - r.traj.ctilde[k]) : INFINITY);
  }
  return w;
}

double worst_element(const Reference& r, const std::function<Complex(double)>& f, int i, int j) {
  double w = 0.0;
  for (std::size_t k = 0; k < r.t.size(); ++k) w = std::max(w, std::abs(f(r.t[k]) - r.traj.states[k](i, j)));
  return w;
}

EnvironmentSpec correlated_decay(double g, double g12) {
  EnvironmentSpec env;
  env.model = EnvironmentModel::CorrelatedDecay;
  env.gamma_a = env.gamma_b = g;
  env.gamma_corr = g12;
  return env;
}

EnvironmentSpec correlated_dephasing(double big, double g0) {
  EnvironmentSpec env;
  env.model = EnvironmentModel::CorrelatedDephasing;
  env.big_gamma_a = env.big_gamma_b = big;
  env.gamma0 = g0;
  return env;
}

TEST(Misprint, ClosedSystemUsesCosSquared) {
  const double a = 0.4, chi = kPi / 4, v = 1.0;
  const Reference r = numeric(family(a, chi), {0.0, v}, EnvironmentSpec{}, 3.0);
  EXPECT_LT(worst_ctilde(r, [&](double t) { return cf::concurrence_closed_system(a, chi, v, t); }), kAgree);
  EXPECT_GT(worst_ctilde(r, [&](double t) { return pr::closed_system(a, chi, v, t); }), kDisagree);
  // For chi = pi/2 the printed radicand turns negative.
  EXPECT_TRUE(std::isnan(pr::closed_system(a, kPi / 2, v, kPi / (2 * v))));
}

TEST(Misprint, CorrelatedDephasingFrequency) {
  const double a = 0.2, chi = kPi / 4, v = 1.0, big = 1.0, g0 = 0.2;
  const Reference r = numeric(family(a, chi), {0.0, v}, correlated_dephasing(big, g0), 5.0);
  const double printed_omega = pr::correlated_dephasing_omega(v, big, g0);
  const double omega = pr::correlated_dephasing_omega_consistent(v, big, g0);
  EXPECT_LT(worst_ctilde(r, [&](double t) { return cf::concurrence_correlated_dephasing(a, chi, big, g0, v, t); }),
            kAgree);
  EXPECT_LT(worst_ctilde(r, [&](double t) { return pr::correlated_dephasing(a, chi, big, g0, omega, t); }), kAgree);
  EXPECT_GT(worst_ctilde(r, [&](double t) { return pr::correlated_dephasing(a, chi, big, g0, printed_omega, t); }),
            kDisagree);
}

TEST(Misprint, CorrelatedDecayInteractingCoherence) {
  const double a = 0.4, chi = kPi / 4, v = 2.0, g = 1.0, g12 = 0.8;
  const DensityMatrix rho0 = family(a, chi);
  const Reference r = numeric(rho0, {0.0, v}, correlated_decay(g, g12), 5.0);
  const auto implemented = [&](double t) { return cf::rho_correlated_decay_interacting(rho0, g, g12, v, t)(1, 2); };
  // The implemented form with only the sinh coefficient changed to 1/6.
  const auto implemented_sixth = [&](double t) {
    return implemented(t) + (0.5 - 1.0 / 6.0) * (rho0(1, 1) + rho0(2, 2)) * std::exp(-g * t) * std::sinh(g12 * t);
  };
  EXPECT_LT(worst_element(r, implemented, 1, 2), kAgree);
  EXPECT_GT(worst_element(r, [&](double t) { return pr::correlated_decay_rho23(rho0, g, g12, v, t); }, 1, 2),
            kDisagree);
  EXPECT_GT(worst_element(r, implemented_sixth, 1, 2), kDisagree);
}

TEST(Misprint, CorrelatedDecayFeedTerms) {
  const double a = 0.4, chi = kPi / 4, g = 1.0, g12 = 0.8;
  const DensityMatrix rho0 = family(a, chi);
  const Reference r = numeric(rho0, {}, correlated_decay(g, g12), 5.0);
  EXPECT_LT(worst_element(r, [&](double t) { return cf::rho_correlated_decay(rho0, g, g12, t)(1, 1); }, 1, 1), kAgree);
  EXPECT_GT(worst_element(r, [&](double t) { return pr::correlated_decay_rho22(rho0, g, g12, t); }, 1, 1), kDisagree);
  // Both agree at t = 0.
  EXPECT_NEAR(std::abs(pr::correlated_decay_rho22(rho0, g, g12, 0.0) - rho0(1, 1)), 0.0, 1e-15);
}

TEST(Misprint, CorrelatedDecayConcurrenceZetaWeight) {
  const double a = 0.4, chi = kPi / 4, g = 1.0, g12 = 0.8;
  const Reference r = numeric(family(a, chi), {}, correlated_decay(g, g12), 5.0);
  EXPECT_GT(worst_ctilde(r, [&](double t) { return pr::correlated_decay_concurrence(a, chi, g, g12, t, 1.0); }),
            kDisagree);
  EXPECT_LT(worst_ctilde(r, [&](double t) { return pr::correlated_decay_concurrence(a, chi, g, g12, t, 0.5); }),
            kAgree);
  EXPECT_LT(worst_ctilde(r, [&](double t) { return cf::concurrence_correlated_decay(a, chi, g, g12, 0.0, t); }),
            kAgree);
}

// The printed kappa is consistent: kappa(0) = a/3 + 2/3 gives
// C~(0) = (2/3)(1 - sqrt(a(1-a))), and it matches the implementation for all t.
TEST(Misprint, KappaAtOriginIsConsistent) {
  for (double a : {0.0, 0.2, 0.4, 0.7, 1.0}) {
    for (double chi : {0.0, kPi / 4, kPi / 2}) {
      EXPECT_NEAR(pr::kappa(a, chi, 1.0, 0.8, 0.0), a / 3 + 2.0 / 3.0, 1e-15);
      EXPECT_NEAR(pr::correlated_decay_concurrence(a, chi, 1.0, 0.8, 0.0), 2.0 / 3.0 * (1 - std::sqrt(a * (1 - a))),
                  1e-15);
      for (double t : {0.5, 2.0, 4.0}) EXPECT_NEAR(cf::kappa(a, chi, 1.0, 0.8, t), pr::kappa(a, chi, 1.0, 0.8, t), 1e-13);
    }
  }
}

TEST(Misprint, DephasingCoherenceSign) {
  const double a = 0.2, chi = kPi / 3, v = 2.0, ga = 0.6, gb = 1.0;
  EnvironmentSpec env;
  env.model = EnvironmentModel::PureDephasing;
  env.big_gamma_a = ga;
  env.big_gamma_b = gb;
  const DensityMatrix rho0 = family(a, chi);
  const Reference r = numeric(rho0, {0.0, v}, env, 5.0);
  EXPECT_GT(worst_element(r, [&](double t) { return pr::dephasing_rho23(rho0, ga, gb, v, t, +1.0); }, 1, 2),
            kDisagree);
  EXPECT_LT(worst_element(r, [&](double t) { return pr::dephasing_rho23(rho0, ga, gb, v, t, -1.0); }, 1, 2), kAgree);
  EXPECT_LT(worst_element(r, [&](double t) { return cf::rho_dephasing(rho0, ga, gb, v, t)(1, 2); }, 1, 2), kAgree);
}

TEST(Misprint, CorrelatedDephasingPopulationBrackets) {
  const double a = 0.2, chi = kPi / 3, v = 2.0, big = 1.0, g0 = 0.2;
  const DensityMatrix rho0 = family(a, chi);
  const Reference r = numeric(rho0, {0.0, v}, correlated_dephasing(big, g0), 5.0);
  EXPECT_GT(worst_element(r, [&](double t) { return pr::correlated_dephasing_rho22(rho0, big, g0, v, t); }, 1, 1),
            kDisagree);
  EXPECT_LT(worst_element(
                r, [&](double t) { return cf::rho_correlated_dephasing_interacting(rho0, big, big, g0, v, t)(1, 1); },
                1, 1),
            kAgree);
}

TEST(Misprint, DissipativeOuterCoherence) {
  const double g = 1.0, v = 1.5;
  std::mt19937_64 rng(60);
  const DensityMatrix rho0 = testing::random_density(rng);
  EnvironmentSpec env;
  env.gamma_a = env.gamma_b = g;
  const Reference r = numeric(rho0, {0.0, v}, env, 5.0);
  EXPECT_GT(worst_element(r, [&](double t) { return pr::dissipative_rho24(rho0, g, v, t); }, 1, 3), kDisagree);
  EXPECT_LT(worst_element(r, [&](double t) { return cf::rho_dissipative(rho0, g, v, t)(1, 3); }, 1, 3), kAgree);
}

TEST(Misprint, DephasingOnsetTime) {
  const double a = 0.2, big = 1.0, g0 = 0.2;
  const double printed = pr::dephasing_onset(a, big, g0);
  const double implemented = esd_onset_dephasing(a, big, g0);
  EXPECT_LT(printed, 0.0);
  EXPECT_NEAR(cf::concurrence_correlated_dephasing(a, 0.3, big, g0, 0.0, implemented), 0.0, 1e-15);
  EXPECT_GT(std::abs(cf::concurrence_correlated_dephasing(a, 0.3, big, g0, 0.0, std::abs(printed))), kDisagree);
}

}  // namespace
}  // namespace esdlab
