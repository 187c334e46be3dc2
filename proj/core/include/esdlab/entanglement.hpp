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

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "esdlab/qstate.hpp"
#include "esdlab/trajectory.hpp"

namespace esdlab {

/// Eigenvalues of rho * spin_flip(rho), sorted non-increasing and clamped at 0.
///
/// They are obtained as squared singular values of tau = W^T (sy x sy) W with
/// rho = W W^dagger, which avoids taking square roots of eigenvalues that are
/// zero up to round-off. Throws NumericalError when rho has an eigenvalue
/// below -1e-8.
std::array<double, 4> wootters_eigenvalues(const DensityMatrix& rho);

/// sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4); may be negative.
double wootters_signed(const DensityMatrix& rho);

/// Wootters concurrence max{0, wootters_signed(rho)}, in [0, 1].
double concurrence_wootters(const DensityMatrix& rho);

/// Signed pre-concurrence 2(|rho_23| - sqrt(rho_11 rho_44)) for X states with
/// rho_14 = 0. Throws FormError otherwise.
double concurrence_xstate(const DensityMatrix& rho);

struct Interval {
  double start = 0.0;
  double end = 0.0;
};

struct Peak {
  double t = 0.0;
  double value = 0.0;
};

struct EntanglementReport {
  std::vector<Interval> dark_intervals;
  std::vector<Peak> bright_peaks;
  std::optional<double> esd_time;
  double horizon = 0.0;
};

// Continuous C~(t), used to refine interval edges and peaks beyond the grid.
using CtildeEvaluator = std::function<double(double)>;

inline constexpr double kDefaultZeroTol = 1e-9;

/// Extracts dark periods (C <= zero_tol), bright peaks and the ESD time.
///
/// Interval edges are refined by bisection on C~ when `evaluator` is given and
/// by linear interpolation of the sampled C~ otherwise. With an evaluator,
/// each grid step is also probed at its midpoint; a step whose endpoints agree
/// but whose midpoint differs raises GridTooCoarse.
EntanglementReport analyze(const Trajectory& traj, double zero_tol = kDefaultZeroTol,
                           const CtildeEvaluator& evaluator = {});

/// ESD onset ln(1/sqrt(a(1-a))) / (2(Gamma - gamma0)) for (correlated) pure
/// dephasing without coupling. Throws NoESD when a(1-a) <= 0 or gamma0 >= Gamma.
double esd_onset_dephasing(double a, double big_gamma, double gamma0);

}  // namespace esdlab
