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

#include "esdlab/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "esdlab/errors.hpp"

namespace esdlab {

namespace {

// Eigenvalues of rho below this fraction of the largest are treated as exact
// zeros when forming W = V sqrt(D). Solver noise is O(1e-16); its square root
// would otherwise leak O(1e-8) into the singular values.
constexpr double kRankTol = 1e-14;
constexpr double kNegativeEigenTol = -1e-8;
constexpr double kXFormTol = 1e-10;

Matrix4c spin_flip_operator() {
  Matrix4c y = Matrix4c::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

double golden_section_max(const CtildeEvaluator& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::array<double, 4> wootters_eigenvalues(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho.hermitized().matrix());
  const Eigen::Vector4d evals = solver.eigenvalues();
  if (evals.minCoeff() < kNegativeEigenTol) {
    throw NumericalError("density matrix has an eigenvalue below -1e-8");
  }
  const double cutoff = kRankTol * std::max(evals.maxCoeff(), 0.0);
  Matrix4c w = solver.eigenvectors();
  for (int k = 0; k < 4; ++k) {
    const double d = evals(k) > cutoff ? evals(k) : 0.0;
    w.col(k) *= std::sqrt(d);
  }
  const Matrix4c tau = w.transpose() * spin_flip_operator() * w;
  Eigen::JacobiSVD<Matrix4c> svd(tau);
  const Eigen::Vector4d sigma = svd.singularValues();  // non-increasing
  std::array<double, 4> lambda{};
  for (int k = 0; k < 4; ++k) lambda[k] = sigma(k) * sigma(k);
  return lambda;
}

double wootters_signed(const DensityMatrix& rho) {
  const auto lambda = wootters_eigenvalues(rho);
  return std::sqrt(lambda[0]) - std::sqrt(lambda[1]) - std::sqrt(lambda[2]) - std::sqrt(lambda[3]);
}

double concurrence_wootters(const DensityMatrix& rho) {
  return std::max(0.0, wootters_signed(rho));
}

double concurrence_xstate(const DensityMatrix& rho) {
  if (rho.x_form_violation() > kXFormTol || std::abs(rho(basis::ee, basis::gg)) > kXFormTol) {
    throw FormError("X-state concurrence requires only diagonal and rho_23 entries");
  }
  const double p11 = std::max(0.0, rho(basis::ee, basis::ee).real());
  const double p44 = std::max(0.0, rho(basis::gg, basis::gg).real());
  return 2.0 * (std::abs(rho(basis::eg, basis::ge)) - std::sqrt(p11 * p44));
}

EntanglementReport analyze(const Trajectory& traj, double zero_tol, const CtildeEvaluator& evaluator) {
  EntanglementReport report;
  const std::size_t n = traj.size();
  report.horizon = traj.horizon();
  if (n == 0) return report;

  const auto& t = traj.times;
  const auto& ct = traj.ctilde;
  auto is_dark = [zero_tol](double ctilde) { return ctilde <= zero_tol; };

  std::vector<bool> dark(n);
  for (std::size_t k = 0; k < n; ++k) dark[k] = is_dark(ct[k]);

  if (evaluator) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (dark[k] != dark[k + 1]) continue;
      const double mid = 0.5 * (t[k] + t[k + 1]);
      if (is_dark(evaluator(mid)) != dark[k]) {
        throw GridTooCoarse("C~ changes sign twice between t = " + std::to_string(t[k]) +
                            " and t = " + std::to_string(t[k + 1]));
      }
    }
  }

  // Location of the dark/bright switch inside step [t_k, t_{k+1}].
  auto crossing = [&](std::size_t k) {
    if (evaluator) {
      double lo = t[k];
      double hi = t[k + 1];
      for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (is_dark(evaluator(mid)) == dark[k]) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    const double h0 = ct[k] - zero_tol;
    const double h1 = ct[k + 1] - zero_tol;
    if (h0 == h1) return t[k];
    return t[k] + (t[k + 1] - t[k]) * h0 / (h0 - h1);
  };

  double start = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!dark[k]) continue;
    if (k == 0 || !dark[k - 1]) start = (k == 0) ? t[0] : crossing(k - 1);
    if (k + 1 == n || !dark[k + 1]) {
      const double end = (k + 1 == n) ? t[n - 1] : crossing(k);
      report.dark_intervals.push_back({start, end});
    }
  }
  if (dark[n - 1]) report.esd_time = report.dark_intervals.back().start;

  const auto& c = traj.concurrence;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (c[k] <= zero_tol || !(c[k] > c[k - 1]) || c[k] < c[k + 1]) continue;
    Peak peak{t[k], c[k]};
    if (evaluator) {
      const double tp = golden_section_max(evaluator, t[k - 1], t[k + 1]);
      const double value = std::max(0.0, evaluator(tp));
      if (value >= peak.value) peak = {tp, value};
    }
    report.bright_peaks.push_back(peak);
  }
  return report;
}

double esd_onset_dephasing(double a, double big_gamma, double gamma0) {
  const double purity_term = a * (1.0 - a);
  if (!(purity_term > 0.0) || purity_term >= 1.0) {
    throw NoESD("no sudden death: a(1 - a) must lie in (0, 1)");
  }
  if (!(gamma0 < big_gamma)) {
    throw NoESD("no sudden death: gamma0 >= Gamma leaves the coherence undamped");
  }
  return -std::log(purity_term) / (4.0 * (big_gamma - gamma0));
}

}  // namespace esdlab
