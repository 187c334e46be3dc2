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
#include <string_view>

#include <Eigen/Dense>

namespace esdlab {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;

// Two-qubit product basis. Labels |1>..|4> map to indices 0..3:
//   |1> = |e>_A|e>_B, |2> = |e>_A|g>_B, |3> = |g>_A|e>_B, |4> = |g>_A|g>_B.
namespace basis {
inline constexpr int ee = 0;
inline constexpr int eg = 1;
inline constexpr int ge = 2;
inline constexpr int gg = 3;
}  // namespace basis

// 4x4 density matrix in the product basis above. The type does not enforce
// physicality on construction; use validate() to obtain diagnostics.
class DensityMatrix {
 public:
  DensityMatrix() : m_(Matrix4c::Zero()) {}
  explicit DensityMatrix(const Matrix4c& m) : m_(m) {}

  Complex& operator()(int i, int j) { return m_(i, j); }
  const Complex& operator()(int i, int j) const { return m_(i, j); }

  const Matrix4c& matrix() const { return m_; }
  Matrix4c& matrix() { return m_; }

  Complex trace() const { return m_.trace(); }
  DensityMatrix adjoint() const { return DensityMatrix(m_.adjoint()); }
  DensityMatrix hermitized() const { return DensityMatrix(0.5 * (m_ + m_.adjoint())); }

  // True when only the diagonal, (eg,ge)/(ge,eg) and (ee,gg)/(gg,ee) entries
  // exceed tol in magnitude.
  bool is_x_form(double tol) const;
  // Largest magnitude among the entries outside the X pattern.
  double x_form_violation() const;

  static DensityMatrix maximally_mixed() { return DensityMatrix(Matrix4c::Identity() * 0.25); }
  static DensityMatrix projector(int k);

  friend bool operator==(const DensityMatrix& a, const DensityMatrix& b) { return a.m_ == b.m_; }

 private:
  Matrix4c m_;
};

// Largest element-wise |a - b|.
double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b);

// Initial-state family rho = (1/3)(a|1><1| + d|4><4| + (b+c)|psi><psi|) with
// |psi> ~ sqrt(b)|2> + e^{i chi} sqrt(c)|3>, normalised by (a+b+c+d)/3 = 1.
struct InitialStateParams {
  double a = 0.0;
  double b = 1.0;
  double c = 1.0;
  double d = 1.0;
  double chi = 0.0;

  // The one-parameter family used throughout: b = c = |z| = 1, d = 1 - a.
  static InitialStateParams one_parameter(double a, double chi) { return {a, 1.0, 1.0, 1.0 - a, chi}; }

  friend bool operator==(const InitialStateParams&, const InitialStateParams&) = default;
};

struct SystemParams {
  double omega0 = 0.0;  // transition frequency
  double v = 0.0;       // qubit-qubit exchange coupling

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

enum class EnvironmentModel { Dissipative, PureDephasing, CorrelatedDecay, CorrelatedDephasing };

std::string_view to_string(EnvironmentModel model);
// Accepts snake_case names (dissipative, pure_dephasing, correlated_decay,
// correlated_dephasing). Throws ModelParameterError on unknown names.
EnvironmentModel parse_environment_model(std::string_view name);

struct EnvironmentSpec {
  EnvironmentModel model = EnvironmentModel::Dissipative;
  double gamma_a = 0.0;      // decay rate of qubit A
  double gamma_b = 0.0;      // decay rate of qubit B
  double big_gamma_a = 0.0;  // dephasing rate of qubit A
  double big_gamma_b = 0.0;  // dephasing rate of qubit B
  double gamma_corr = 0.0;   // correlated decay rate (CorrelatedDecay only)
  double gamma0 = 0.0;       // correlated dephasing rate (CorrelatedDephasing only)

  // Largest rate entering the selected model's generator.
  double max_rate() const;

  friend bool operator==(const EnvironmentSpec&, const EnvironmentSpec&) = default;
};

// Throws ModelParameterError when a rate used by the model is negative or
// non-finite, or when the correlated rates violate gamma_corr <= min(gamma_a,
// gamma_b) / 2 gamma0 <= big_gamma_a + big_gamma_b.
void validate_environment(const EnvironmentSpec& env);

struct Diagnostics {
  double trace_error = 0.0;        // |tr(rho) - 1|
  double hermiticity_error = 0.0;  // max |rho_ij - conj(rho_ji)|
  double min_eigenvalue = 0.0;     // of the hermitized matrix
};

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = -1e-8;

DensityMatrix build_initial_density(const InitialStateParams& p);

// rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
DensityMatrix spin_flip(const DensityMatrix& rho);

// Reporting only. `tol` is the trace/Hermiticity tolerance used by is_valid().
Diagnostics validate(const DensityMatrix& rho);
bool is_valid(const Diagnostics& d, double tol = kTraceTol);

}  // namespace esdlab
