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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "esdlab/closed_form.hpp"
#include "esdlab/errors.hpp"
#include "esdlab/liouville.hpp"
#include "oracle.hpp"

namespace esdlab {
namespace {

namespace cf = closed_form;
using testing::kPi;

DensityMatrix family(double a, double chi) { return build_initial_density(InitialStateParams::one_parameter(a, chi)); }

EnvironmentSpec dissipative_env(double gamma) {
  EnvironmentSpec env;
  env.gamma_a = env.gamma_b = gamma;
  return env;
}
EnvironmentSpec dephasing_env(double ga, double gb) {
  EnvironmentSpec env;
  env.model = EnvironmentModel::PureDephasing;
  env.big_gamma_a = ga;
  env.big_gamma_b = gb;
  return env;
}
EnvironmentSpec correlated_decay_env(double gamma, double g12) {
  EnvironmentSpec env;
  env.model = EnvironmentModel::CorrelatedDecay;
  env.gamma_a = env.gamma_b = gamma;
  env.gamma_corr = g12;
  return env;
}
EnvironmentSpec correlated_dephasing_env(double ga, double gb, double g0) {
  EnvironmentSpec env;
  env.model = EnvironmentModel::CorrelatedDephasing;
  env.big_gamma_a = ga;
  env.big_gamma_b = gb;
  env.gamma0 = g0;
  return env;
}

// Largest element deviation between a closed form and the numeric integrator
// over a grid.
template <class F>
double worst_against_numeric(const DensityMatrix& rho0, const SystemParams& p, const EnvironmentSpec& env,
                             double t_max, F closed) {
  const auto grid = uniform_grid(t_max, 51);
  const Trajectory tr = evolve(rho0, p, env, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, max_abs_diff(tr.states[i], closed(grid[i])));
  return worst;
}

TEST(Helpers, TrigContinuedIsSmoothThroughZeroRadicand) {
  const double t = 1.7;
  for (double r : {-1e-3, -1e-7, -1e-9, 0.0, 1e-9, 1e-7, 1e-3}) {
    const cf::TrigPair p = cf::trig_continued(r, t);
    const double q = std::sqrt(std::abs(r));
    const double c = r > 0 ? std::cos(q * t) : r < 0 ? std::cosh(q * t) : 1.0;
    const double s = r > 0 ? std::sin(q * t) / q : r < 0 ? std::sinh(q * t) / q : t;
    EXPECT_NEAR(p.cos_term, c, 1e-12) << r;
    EXPECT_NEAR(p.sin_over_freq, s, 1e-12) << r;
  }
}

TEST(Helpers, DampedOscillationHyperbolicBranch) {
  // e^{-a t}(kc cosh(qt) + ks sinh(qt)/q) evaluated directly at moderate t.
  const double a = 2.0, q = 1.5, kc = 0.7, ks = -0.4, t = 3.0;
  const double direct = std::exp(-a * t) * (kc * std::cosh(q * t) + ks * std::sinh(q * t) / q);
  EXPECT_NEAR(cf::damped_oscillation(a, -q * q, kc, ks, t), direct, 1e-15);
  // Large t where cosh overflows on its own.
  const double big = cf::damped_oscillation(1.0, -0.81, 1.0, 0.0, 2000.0);
  EXPECT_TRUE(std::isfinite(big));
  EXPECT_NEAR(big, 0.5 * std::exp(-0.1 * 2000.0), 1e-100);
}

TEST(Helpers, Expm1RatioLimit) {
  EXPECT_DOUBLE_EQ(cf::expm1_ratio(0.0, 2.0), 2.0);
  EXPECT_NEAR(cf::expm1_ratio(1e-8, 2.0), 2.0 * (1.0 + 1e-8), 1e-15);
  EXPECT_NEAR(cf::expm1_ratio(0.5, 2.0), std::expm1(1.0) / 0.5, 1e-15);
  EXPECT_NEAR(cf::expm1_ratio(-3.0, 2.0), std::expm1(-6.0) / -3.0, 1e-15);
}

TEST(Intermediates, InitialValuesAndDefinitions) {
  cf::IntermediateInputs in;
  in.a = 0.4;
  in.chi = kPi / 3;
  in.gamma = 1.0;
  in.gamma12 = 0.8;
  in.big_gamma_a = in.big_gamma_b = 1.0;
  in.gamma0 = 0.2;
  in.v = 5.0;
  in.t = 0.0;
  const cf::AnalyticIntermediates z = cf::intermediates(in);
  EXPECT_EQ(z.w, 0.0);
  EXPECT_EQ(z.tau, 0.0);
  EXPECT_EQ(z.zeta, 0.0);
  EXPECT_NEAR(z.kappa, in.a / 3.0 + 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(z.omega.real(), std::sqrt(25.0 - 0.25), 1e-14);
  EXPECT_NEAR(z.omega1.real(), std::sqrt(100.0 - 1.0), 1e-14);
  EXPECT_NEAR(z.omega_prime.real(), std::sqrt(25.0 - 0.16), 1e-14);

  in.t = 0.7;
  in.v = 0.1;
  const cf::AnalyticIntermediates y = cf::intermediates(in);
  EXPECT_NEAR(y.w, std::sqrt(1.0 - std::exp(-0.7)), 1e-15);
  EXPECT_NEAR(y.tau, 0.7, 1e-15);
  EXPECT_EQ(y.omega.real(), 0.0);
  EXPECT_GT(y.omega.imag(), 0.0);
}

// ---- dissipative ----

TEST(RhoDissipative, IdentityAtZero) {
  std::mt19937_64 rng(30);
  const DensityMatrix rho0 = testing::random_density(rng);
  EXPECT_EQ(cf::rho_dissipative(rho0, 0.8, 3.0, 0.0), rho0);
}

TEST(RhoDissipative, PreservesXForm) {
  for (double chi : {0.3, kPi / 2, 4.0}) {
    for (double t : {0.1, 1.0, 4.0}) EXPECT_TRUE(cf::rho_dissipative(family(0.4, chi), 1.0, 5.0, t).is_x_form(1e-15));
  }
}

TEST(RhoDissipative, UnitTimeValues) {
  const DensityMatrix rho = cf::rho_dissipative(family(0.4, 0.9), 1.0, 0.0, 1.0);
  EXPECT_NEAR(rho(0, 0).real(), 0.4 / 3.0 * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(rho(1, 1).real(), std::exp(-1.0) / 3.0 + 0.4 / 3.0 * std::exp(-2.0) * (std::exp(1.0) - 1.0), 1e-15);
}

TEST(RhoDissipative, GeneralStatesMatchMatrixExponential) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 25; ++k) {
    const double gamma = 0.1 + u(rng), v = 5.0 * u(rng), omega0 = 4.0 * u(rng) - 2.0, t = 5.0 * u(rng);
    const DensityMatrix rho0 = testing::random_density(rng);
    const DensityMatrix ref = testing::expm_evolve(rho0, {omega0, v}, dissipative_env(gamma), t);
    EXPECT_LT(max_abs_diff(cf::rho_dissipative(rho0, gamma, v, t, omega0), ref), 1e-11) << k;
  }
}

// ---- pure dephasing ----

TEST(RhoDephasing, NonInteractingDecayOfCoherence) {
  const DensityMatrix rho0 = family(0.3, 1.2);
  for (double t : {0.2, 1.0, 3.0}) {
    const DensityMatrix rho = cf::rho_dephasing(rho0, 0.4, 0.9, 0.0, t);
    EXPECT_NEAR(std::abs(rho(1, 2) - rho0(1, 2) * std::exp(-1.3 * t)), 0.0, 1e-15);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(rho(i, i).real(), rho0(i, i).real(), 1e-15);
  }
}

TEST(RhoDephasing, SymmetricRealInputKeepsPopulations) {
  const DensityMatrix rho0 = family(0.4, 0.0);
  for (double t : {0.3, 1.1, 2.9}) {
    const DensityMatrix rho = cf::rho_dephasing(rho0, 1.0, 1.0, 3.0, t);
    EXPECT_NEAR(rho(1, 1).real(), rho0(1, 1).real(), 1e-15);
    EXPECT_NEAR(rho(2, 2).real(), rho0(2, 2).real(), 1e-15);
  }
}

TEST(RhoDephasing, CriticalCouplingIsContinuous) {
  const double ga = 0.7, gb = 1.3;
  const double vc = (ga + gb) / 4.0;
  const DensityMatrix rho0 = family(0.2, kPi / 3);
  const double t = 2.3;
  const DensityMatrix at = cf::rho_dephasing(rho0, ga, gb, vc, t);
  for (double dv : {1e-7, -1e-7}) {
    EXPECT_LT(max_abs_diff(at, cf::rho_dephasing(rho0, ga, gb, vc + dv, t)), 1e-6);
  }
  const DensityMatrix ref = testing::expm_evolve(rho0, {0.0, vc}, dephasing_env(ga, gb), t);
  EXPECT_LT(max_abs_diff(at, ref), 1e-12);
}

TEST(RhoDephasing, RejectsNonXForm) {
  std::mt19937_64 rng(32);
  EXPECT_THROW(cf::rho_dephasing(testing::random_density(rng), 1.0, 1.0, 1.0, 1.0), FormError);
  EXPECT_EQ(cf::rho_dephasing(family(0.3, 0.2), 1.0, 1.0, 1.0, 0.0), family(0.3, 0.2));
}

// ---- correlated decay ----

TEST(RhoCorrelatedDecay, NoCorrelationReducesToDissipative) {
  const DensityMatrix rho0 = family(0.4, 0.8);
  for (double t : {0.0, 0.5, 2.0}) {
    EXPECT_LT(max_abs_diff(cf::rho_correlated_decay(rho0, 1.0, 0.0, t), cf::rho_dissipative(rho0, 1.0, 0.0, t)),
              1e-15);
    EXPECT_LT(max_abs_diff(cf::rho_correlated_decay_interacting(rho0, 1.0, 0.0, 3.0, t),
                           cf::rho_dissipative(rho0, 1.0, 3.0, t)),
              1e-15);
  }
}

TEST(RhoCorrelatedDecay, ReferencePointAgainstNumeric) {
  const DensityMatrix rho0 = family(0.2, kPi / 4);
  const std::vector<double> grid = {0.0, 1.0};
  const Trajectory tr = evolve(rho0, {}, correlated_decay_env(1.0, 0.8), grid);
  EXPECT_LT(max_abs_diff(cf::rho_correlated_decay(rho0, 1.0, 0.8, 1.0), tr.states[1]), 1e-8);
}

TEST(RhoCorrelatedDecay, InteractingAtZeroCouplingEqualsNonInteracting) {
  const DensityMatrix rho0 = family(0.4, 2.0);
  for (double t : {0.4, 1.7}) {
    EXPECT_LT(max_abs_diff(cf::rho_correlated_decay_interacting(rho0, 1.0, 0.8, 0.0, t),
                           cf::rho_correlated_decay(rho0, 1.0, 0.8, t)),
              1e-16);
  }
}

TEST(RhoCorrelatedDecay, PoleIsRemovable) {
  const DensityMatrix rho0 = family(0.3, 0.6);
  const double gamma = 1.0, t = 2.5;
  const DensityMatrix at = cf::rho_correlated_decay_interacting(rho0, gamma, gamma, 2.0, t);
  const DensityMatrix ref = testing::expm_evolve(rho0, {0.0, 2.0}, correlated_decay_env(gamma, gamma), t);
  EXPECT_LT(max_abs_diff(at, ref), 1e-12);
  for (double eps : {1e-5, 1e-7, 1e-9}) {
    const DensityMatrix near = cf::rho_correlated_decay_interacting(rho0, gamma, gamma * (1.0 - eps), 2.0, t);
    EXPECT_LT(max_abs_diff(at, near), 10.0 * eps * t) << eps;
  }
  // Inside the tolerance band above gamma is still accepted.
  EXPECT_NO_THROW(cf::rho_correlated_decay(rho0, gamma, gamma * (1.0 + 0.5 * cf::kPoleBand), t));
  EXPECT_THROW(cf::rho_correlated_decay(rho0, gamma, gamma * 1.01, t), DomainError);
  EXPECT_THROW(cf::concurrence_correlated_decay(0.3, 0.6, gamma, gamma * 1.01, 0.0, t), DomainError);
}

// ---- correlated dephasing ----

TEST(RhoCorrelatedDephasing, DecoherenceFreeLimit) {
  const DensityMatrix rho0 = family(0.2, 1.0);
  for (double t : {0.5, 3.0, 10.0}) {
    const DensityMatrix rho = cf::rho_correlated_dephasing(rho0, 0.6, 1.4, 1.0, t);
    EXPECT_EQ(rho(1, 2), rho0(1, 2));
  }
}

TEST(RhoCorrelatedDephasing, Reductions) {
  const DensityMatrix rho0 = family(0.2, 1.0);
  for (double t : {0.0, 0.5, 2.0}) {
    EXPECT_LT(max_abs_diff(cf::rho_correlated_dephasing(rho0, 0.6, 1.4, 0.0, t), cf::rho_dephasing(rho0, 0.6, 1.4, 0.0, t)),
              1e-16);
    EXPECT_LT(max_abs_diff(cf::rho_correlated_dephasing_interacting(rho0, 0.6, 1.4, 0.0, 3.0, t),
                           cf::rho_dephasing(rho0, 0.6, 1.4, 3.0, t)),
              1e-16);
    EXPECT_LT(max_abs_diff(cf::rho_correlated_dephasing_interacting(rho0, 0.6, 1.4, 0.3, 0.0, t),
                           cf::rho_correlated_dephasing(rho0, 0.6, 1.4, 0.3, t)),
              1e-15);
  }
}

TEST(RhoCorrelatedDephasing, CoherenceMagnitudeAtUnitTime) {
  const DensityMatrix rho = cf::rho_correlated_dephasing(family(0.2, kPi / 4), 1.0, 1.0, 0.2, 1.0);
  EXPECT_NEAR(std::abs(rho(1, 2)), std::exp(-1.6) / 3.0, 1e-15);
  EXPECT_NEAR(std::abs(rho(1, 2)), 0.0672988, 1e-6);
}

TEST(RhoCorrelatedDephasing, CriticalCouplingIsContinuous) {
  const double ga = 1.0, gb = 1.0, g0 = 0.3;
  const double vc = (ga + gb - 2.0 * g0) / 4.0;
  const DensityMatrix rho0 = family(0.2, kPi / 5);
  const double t = 1.9;
  const DensityMatrix at = cf::rho_correlated_dephasing_interacting(rho0, ga, gb, g0, vc, t);
  for (double dv : {1e-9, -1e-9}) {
    EXPECT_LT(max_abs_diff(at, cf::rho_correlated_dephasing_interacting(rho0, ga, gb, g0, vc + dv, t)), 1e-9);
  }
  EXPECT_LT(max_abs_diff(at, testing::expm_evolve(rho0, {0.0, vc}, correlated_dephasing_env(ga, gb, g0), t)), 1e-12);
}

// ---- oracle equivalence on random draws ----

struct Draw {
  DensityMatrix rho0;
  double v;
};

class OracleEquivalence : public ::testing::Test {
 protected:
  std::mt19937_64 rng{40};
  std::uniform_real_distribution<double> u{0.0, 1.0};

  Draw draw() { return {build_initial_density(testing::random_family(rng)), 6.0 * u(rng)}; }

  void check(const DensityMatrix& rho0, const SystemParams& p, const EnvironmentSpec& env) {
    const double worst = worst_against_numeric(rho0, p, env, 5.0, [&](double t) { return cf::propagate(rho0, p, env, t); });
    EXPECT_LT(worst, 1e-8) << to_string(env.model) << " v=" << p.v;
    for (double t : {0.7, 3.1}) {
      EXPECT_LT(max_abs_diff(cf::propagate(rho0, p, env, t), testing::expm_evolve(rho0, p, env, t)), 1e-11);
    }
  }
};

TEST_F(OracleEquivalence, Dissipative) {
  for (int k = 0; k < 20; ++k) {
    const Draw d = draw();
    check(d.rho0, {4.0 * u(rng), d.v}, dissipative_env(0.1 + u(rng)));
  }
}

TEST_F(OracleEquivalence, PureDephasing) {
  for (int k = 0; k < 20; ++k) {
    const Draw d = draw();
    check(d.rho0, {4.0 * u(rng), d.v}, dephasing_env(0.1 + u(rng), 0.1 + u(rng)));
  }
}

TEST_F(OracleEquivalence, CorrelatedDecay) {
  for (int k = 0; k < 20; ++k) {
    const Draw d = draw();
    const double gamma = 0.1 + u(rng);
    check(d.rho0, {4.0 * u(rng), k % 4 == 0 ? 0.0 : d.v}, correlated_decay_env(gamma, gamma * u(rng)));
  }
}

TEST_F(OracleEquivalence, CorrelatedDephasing) {
  for (int k = 0; k < 20; ++k) {
    const Draw d = draw();
    const double ga = 0.1 + u(rng), gb = 0.1 + u(rng);
    check(d.rho0, {4.0 * u(rng), k % 4 == 0 ? 0.0 : d.v}, correlated_dephasing_env(ga, gb, 0.5 * (ga + gb) * u(rng)));
  }
}

TEST(Propagate, DispatchLimits) {
  EnvironmentSpec unequal = dissipative_env(1.0);
  unequal.gamma_b = 0.5;
  EXPECT_FALSE(cf::closed_form_unavailable({}, unequal).empty());
  EXPECT_THROW(cf::propagate(family(0.2, 0.1), {}, unequal, 1.0), DomainError);
  EXPECT_TRUE(cf::closed_form_unavailable({}, dephasing_env(0.2, 0.9)).empty());
}

// ---- concurrence evaluators ----

TEST(ConcurrenceDissipative, InitialValue) {
  EXPECT_NEAR(cf::concurrence_dissipative(0.4, 1.1, 5.0, 1.0, 0.0), 2.0 / 3.0 * (1.0 - std::sqrt(0.24)), 1e-15);
  EXPECT_NEAR(cf::concurrence_dissipative(0.4, 1.1, 5.0, 1.0, 0.0), 0.340068, 1e-6);
}

TEST(ConcurrenceDissipative, PhaseIndependentWithoutCoupling) {
  for (double t : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(cf::concurrence_dissipative(0.3, 0.2, 0.0, 1.0, t), cf::concurrence_dissipative(0.3, 2.2, 0.0, 1.0, t),
                1e-15);
  }
}

TEST(ConcurrenceDissipative, DarkAtQuarterPeriod) {
  EXPECT_LT(cf::concurrence_dissipative(0.4, kPi / 2, 5.0, 1.0, kPi / 20), 0.0);
}

TEST(ConcurrenceDephasing, OnsetWithoutCoupling) {
  // C~ = (2/3)(e^{-2 tau} - 0.4) for a = 0.2.
  for (double tau : {0.1, 0.458, 1.0}) {
    EXPECT_NEAR(cf::concurrence_dephasing(0.2, 0.7, 0.0, 1.0, tau), 2.0 / 3.0 * (std::exp(-2.0 * tau) - 0.4), 1e-15);
  }
  EXPECT_NEAR(cf::concurrence_dephasing(0.2, 0.7, 0.0, 1.0, 0.5 * std::log(2.5)), 0.0, 1e-15);
  for (double tau : {1.0, 10.0, 100.0}) EXPECT_GT(cf::concurrence_dephasing(1.0, 0.3, 0.0, 1.0, tau), 0.0);
}

TEST(ConcurrenceCorrelatedDecay, InitialValueAndReduction) {
  for (double chi : {0.0, 1.0, kPi / 2}) {
    EXPECT_NEAR(cf::concurrence_correlated_decay(0.3, chi, 1.0, 0.8, 4.0, 0.0), 2.0 / 3.0 * (1.0 - std::sqrt(0.21)),
                1e-14);
  }
  for (double t : {0.2, 1.0, 3.0}) {
    EXPECT_NEAR(cf::concurrence_correlated_decay(0.3, 1.0, 1.0, 0.0, 0.0, t),
                cf::concurrence_dissipative(0.3, 1.0, 0.0, 1.0, t), 1e-14);
  }
}

TEST(ConcurrenceCorrelatedDecay, TemporaryDisentanglementAndRevival) {
  const auto c = [](double t) { return cf::concurrence_correlated_decay(0.2, kPi / 4, 1.0, 0.8, 0.0, t); };
  bool went_dark = false, revived = false;
  for (double t = 0.0; t <= 5.0; t += 1e-3) {
    if (c(t) < 0.0) went_dark = true;
    if (went_dark && c(t) > 0.0) revived = true;
  }
  EXPECT_TRUE(went_dark);
  EXPECT_TRUE(revived);
  EXPECT_GT(c(5.0), 0.0);
}

TEST(ConcurrenceCorrelatedDephasing, DecoherenceFreeValue) {
  for (double t : {0.0, 0.5, 5.0, 50.0}) {
    EXPECT_NEAR(cf::concurrence_correlated_dephasing(0.2, kPi / 4, 1.0, 1.0, 0.0, t), 0.4, 1e-15);
  }
}

TEST(ConcurrenceCorrelatedDephasing, OnsetDoublesAtHalfCorrelation) {
  const double t = std::log(2.5) / (2.0 * 0.5);
  EXPECT_NEAR(t, 0.916291, 1e-6);
  EXPECT_NEAR(cf::concurrence_correlated_dephasing(0.2, 0.4, 1.0, 0.5, 0.0, t), 0.0, 1e-15);
  for (double v : {0.0, 2.0, 5.0}) {
    EXPECT_NEAR(cf::concurrence_correlated_dephasing(0.2, 1.3, 1.0, 0.5, v, 0.0), 2.0 / 3.0 * (1.0 - 0.4), 1e-15);
  }
}

TEST(ConcurrenceEvaluators, MatchStateBasedConcurrenceAlongTrajectories) {
  std::mt19937_64 rng(50);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 25; ++k) {
    const double a = u(rng), chi = 2.0 * kPi * u(rng), v = 6.0 * u(rng), gamma = 0.2 + u(rng);
    const double g12 = gamma * u(rng), big = 0.2 + u(rng), g0 = big * u(rng);
    const DensityMatrix rho0 = family(a, chi);
    for (double t = 0.0; t <= 5.0; t += 0.05) {
      const auto both = [](const DensityMatrix& rho) {
        return std::pair{concurrence_wootters(rho), std::max(0.0, concurrence_xstate(rho))};
      };
      const auto check = [&](double closed, const DensityMatrix& rho) {
        const auto [w, x] = both(rho);
        EXPECT_NEAR(std::max(0.0, closed), w, 1e-9);
        EXPECT_NEAR(closed, concurrence_xstate(rho), 1e-9);
        EXPECT_NEAR(w, x, 1e-10);
      };
      check(cf::concurrence_closed_system(a, chi, v, t), cf::rho_dissipative(rho0, 0.0, v, t));
      check(cf::concurrence_dissipative(a, chi, v, gamma, t), cf::rho_dissipative(rho0, gamma, v, t));
      check(cf::concurrence_dephasing(a, chi, v, big, t), cf::rho_dephasing(rho0, big, big, v, t));
      check(cf::concurrence_correlated_decay(a, chi, gamma, g12, v, t),
            cf::rho_correlated_decay_interacting(rho0, gamma, g12, v, t));
      check(cf::concurrence_correlated_dephasing(a, chi, big, g0, v, t),
            cf::rho_correlated_dephasing_interacting(rho0, big, big, g0, v, t));
    }
  }
}

TEST(ConcurrenceEvaluators, DomainOfA) {
  EXPECT_THROW(cf::concurrence_dissipative(1.5, 0.0, 0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(cf::concurrence_dephasing(-0.1, 0.0, 0.0, 1.0, 1.0), DomainError);
  EXPECT_NO_THROW(cf::concurrence_correlated_dephasing(1.0, 0.0, 1.0, 0.0, 0.0, 1.0));
}

}  // namespace
}  // namespace esdlab
