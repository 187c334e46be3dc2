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

#include "esdlab/qstate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "esdlab/errors.hpp"

namespace esdlab {

namespace {

constexpr double kNormalizationTol = 1e-12;

// sigma_y x sigma_y is anti-diagonal in the product basis with entries
// (-1, +1, +1, -1) read from the top-right corner downwards.
constexpr std::array<double, 4> kSpinFlipSign = {-1.0, 1.0, 1.0, -1.0};

bool is_x_entry(int i, int j) {
  return i == j || i + j == 3;
}

void require_finite_nonnegative(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ModelParameterError(std::string("rate ") + name + " must be finite and >= 0");
  }
}

}  // namespace

bool DensityMatrix::is_x_form(double tol) const {
  return x_form_violation() <= tol;
}

double DensityMatrix::x_form_violation() const {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!is_x_entry(i, j)) worst = std::max(worst, std::abs(m_(i, j)));
    }
  }
  return worst;
}

DensityMatrix DensityMatrix::projector(int k) {
  DensityMatrix rho;
  rho(k, k) = 1.0;
  return rho;
}

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

std::string_view to_string(EnvironmentModel model) {
  switch (model) {
    case EnvironmentModel::Dissipative: return "dissipative";
    case EnvironmentModel::PureDephasing: return "pure_dephasing";
    case EnvironmentModel::CorrelatedDecay: return "correlated_decay";
    case EnvironmentModel::CorrelatedDephasing: return "correlated_dephasing";
  }
  return "unknown";
}

EnvironmentModel parse_environment_model(std::string_view name) {
  if (name == "dissipative") return EnvironmentModel::Dissipative;
  if (name == "pure_dephasing" || name == "dephasing") return EnvironmentModel::PureDephasing;
  if (name == "correlated_decay") return EnvironmentModel::CorrelatedDecay;
  if (name == "correlated_dephasing") return EnvironmentModel::CorrelatedDephasing;
  throw ModelParameterError("unknown environment model '" + std::string(name) + "'");
}

double EnvironmentSpec::max_rate() const {
  switch (model) {
    case EnvironmentModel::Dissipative:
      return std::max(gamma_a, gamma_b);
    case EnvironmentModel::CorrelatedDecay:
      return std::max({gamma_a, gamma_b, gamma_corr});
    case EnvironmentModel::PureDephasing:
      return std::max(big_gamma_a, big_gamma_b);
    case EnvironmentModel::CorrelatedDephasing:
      return std::max({big_gamma_a, big_gamma_b, gamma0});
  }
  return 0.0;
}

void validate_environment(const EnvironmentSpec& env) {
  switch (env.model) {
    case EnvironmentModel::Dissipative:
      require_finite_nonnegative(env.gamma_a, "gamma_a");
      require_finite_nonnegative(env.gamma_b, "gamma_b");
      break;
    case EnvironmentModel::CorrelatedDecay:
      require_finite_nonnegative(env.gamma_a, "gamma_a");
      require_finite_nonnegative(env.gamma_b, "gamma_b");
      require_finite_nonnegative(env.gamma_corr, "gamma_corr");
      if (env.gamma_corr > std::min(env.gamma_a, env.gamma_b)) {
        throw ModelParameterError(
            "correlated decay requires gamma_corr <= min(gamma_a, gamma_b) "
            "(pole of the correlated-decay propagator at gamma_corr = gamma)");
      }
      break;
    case EnvironmentModel::PureDephasing:
      require_finite_nonnegative(env.big_gamma_a, "big_gamma_a");
      require_finite_nonnegative(env.big_gamma_b, "big_gamma_b");
      break;
    case EnvironmentModel::CorrelatedDephasing:
      require_finite_nonnegative(env.big_gamma_a, "big_gamma_a");
      require_finite_nonnegative(env.big_gamma_b, "big_gamma_b");
      require_finite_nonnegative(env.gamma0, "gamma0");
      if (2.0 * env.gamma0 > env.big_gamma_a + env.big_gamma_b) {
        throw ModelParameterError(
            "correlated dephasing requires 2 gamma0 <= big_gamma_a + big_gamma_b");
      }
      break;
  }
}

DensityMatrix build_initial_density(const InitialStateParams& p) {
  for (double x : {p.a, p.b, p.c, p.d}) {
    if (!std::isfinite(x) || x < 0.0) throw NegativeParameter("state parameters a, b, c, d must be >= 0");
  }
  if (!std::isfinite(p.chi)) throw DomainError("initial phase chi must be finite");
  const double norm = (p.a + p.b + p.c + p.d) / 3.0;
  if (std::abs(norm - 1.0) > kNormalizationTol) {
    throw NormalizationError("(a + b + c + d) / 3 must equal 1, got " + std::to_string(norm));
  }
  DensityMatrix rho;
  rho(basis::ee, basis::ee) = p.a / 3.0;
  rho(basis::eg, basis::eg) = p.b / 3.0;
  rho(basis::ge, basis::ge) = p.c / 3.0;
  rho(basis::gg, basis::gg) = p.d / 3.0;
  const Complex z = std::polar(std::sqrt(p.b * p.c), p.chi);
  rho(basis::eg, basis::ge) = z / 3.0;
  rho(basis::ge, basis::eg) = std::conj(z) / 3.0;
  return rho;
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
  DensityMatrix out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out(i, j) = kSpinFlipSign[i] * kSpinFlipSign[j] * std::conj(rho(3 - i, 3 - j));
    }
  }
  return out;
}

Diagnostics validate(const DensityMatrix& rho) {
  Diagnostics d;
  d.trace_error = std::abs(rho.trace() - 1.0);
  d.hermiticity_error = (rho.matrix() - rho.matrix().adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho.hermitized().matrix(), Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  return d;
}

bool is_valid(const Diagnostics& d, double tol) {
  return d.trace_error <= tol && d.hermiticity_error <= std::max(tol, kHermiticityTol) &&
         d.min_eigenvalue >= kPositivityTol;
}

}  // namespace esdlab
