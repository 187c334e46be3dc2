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

#include <span>

#include <Eigen/Dense>

#include "esdlab/qstate.hpp"
#include "esdlab/trajectory.hpp"

namespace esdlab {

// Linear map on 4x4 matrices, stored as its 16x16 action on row-major vec(rho).
class Superoperator {
 public:
  using Matrix = Eigen::Matrix<Complex, 16, 16>;

  Superoperator() : m_(Matrix::Zero()) {}
  explicit Superoperator(const Matrix& m) : m_(m) {}

  // Tabulates an arbitrary linear action on the matrix units |i><j|.
  template <typename F>
  static Superoperator from_action(F&& action) {
    Matrix m;
    for (int k = 0; k < 16; ++k) {
      Matrix4c unit = Matrix4c::Zero();
      unit(k / 4, k % 4) = 1.0;
      const Matrix4c image = action(unit);
      for (int r = 0; r < 16; ++r) m(r, k) = image(r / 4, r % 4);
    }
    return Superoperator(m);
  }

  DensityMatrix operator()(const DensityMatrix& rho) const;
  const Matrix& matrix() const { return m_; }

  Superoperator& operator+=(const Superoperator& other) {
    m_ += other.m_;
    return *this;
  }
  friend Superoperator operator+(Superoperator a, const Superoperator& b) { return a += b; }

 private:
  Matrix m_;
};

// Single-qubit operators embedded in the two-qubit product basis.
namespace ops {
Matrix4c raise_a();
Matrix4c raise_b();
Matrix4c lower_a();
Matrix4c lower_b();
Matrix4c sz_a();
Matrix4c sz_b();
// H / hbar = omega0 (Sz_A + Sz_B) + v (S+_A S-_B + S+_B S-_A).
Matrix4c hamiltonian(const SystemParams& params);
}  // namespace ops

// rho -> -i [H, rho] with hbar = 1.
Superoperator hamiltonian_part(const SystemParams& params);

// Environment term of the selected model. Throws ModelParameterError when
// the spec fails validate_environment().
Superoperator dissipator(const EnvironmentSpec& env);

// hamiltonian_part + dissipator.
Superoperator generator(const SystemParams& params, const EnvironmentSpec& env);

// Hermitian matrices as 16 reals: the four populations, then (Re, Im) of the
// upper triangle in row order (01, 02, 03, 12, 13, 23).
using PackedState = Eigen::Matrix<double, 16, 1>;
using PackedGenerator = Eigen::Matrix<double, 16, 16>;

PackedState pack(const DensityMatrix& rho);  // uses the hermitized matrix
DensityMatrix unpack(const PackedState& x);
// Real matrix A with pack(L(unpack(x))) = A x. L must preserve Hermiticity.
PackedGenerator packed_generator(const Superoperator& generator);

enum class IntegratorMethod { DormandPrince45, ClassicalRK4 };

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  // Largest step in units of 1/rate, rate = max(2|v|, 2|omega0|, model rates).
  double max_step = 1e-2;
  // On: integrate the packed Hermitian representation, so every accepted step
  // is exactly (rho + rho^dagger)/2. Off: integrate the full complex matrix.
  bool hermitize_each_step = true;
  IntegratorMethod method = IntegratorMethod::DormandPrince45;
  // Upper bound on |tr(rho) - 1| at every sample.
  double trace_error_limit = 1e-6;

  friend bool operator==(const IntegratorConfig&, const IntegratorConfig&) = default;
};

// Rate that sets the time scale of the generator (never zero).
double characteristic_rate(const SystemParams& params, const EnvironmentSpec& env);

/// Integrates d rho/dt = L rho and samples rho at every time in t_grid.
///
/// t_grid must start at 0 and be non-decreasing. The first sample is rho0
/// itself. Trace is never renormalised; a sample with trace error above
/// cfg.trace_error_limit raises DiagnosticsExceeded, a stalled step size
/// raises StepSizeUnderflow.
Trajectory evolve(const DensityMatrix& rho0, const SystemParams& params, const EnvironmentSpec& env,
                  std::span<const double> t_grid, const IntegratorConfig& cfg = {});

}  // namespace esdlab
