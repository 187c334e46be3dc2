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

#include "esdlab/liouville.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "esdlab/errors.hpp"

namespace esdlab {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix4c kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

// Single qubit, basis order (|e>, |g>).
Eigen::Matrix2cd sigma_plus() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 1) = 1.0;
  return m;
}

Eigen::Matrix2cd spin_z() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = 0.5;
  m(1, 1) = -0.5;
  return m;
}

// -(rate/2)(X Y rho - 2 Y rho X + rho X Y): the decay term between raising
// operator X and lowering operator Y.
Superoperator decay_term(const Matrix4c& raise, const Matrix4c& lower, double rate) {
  const Matrix4c xy = raise * lower;
  return Superoperator::from_action([&](const Matrix4c& rho) -> Matrix4c {
    return -0.5 * rate * (xy * rho - 2.0 * lower * rho * raise + rho * xy);
  });
}

// -rate (Z Z rho - 2 Z rho Z + rho Z Z).
Superoperator dephasing_term(const Matrix4c& sz, double rate) {
  const Matrix4c zz = sz * sz;
  return Superoperator::from_action([&](const Matrix4c& rho) -> Matrix4c {
    return -rate * (zz * rho - 2.0 * sz * rho * sz + rho * zz);
  });
}

// -2 gamma0 (ZA ZB rho - ZB rho ZA + rho ZA ZB - ZA rho ZB).
Superoperator correlated_dephasing_term(double gamma0) {
  const Matrix4c za = ops::sz_a();
  const Matrix4c zb = ops::sz_b();
  const Matrix4c zz = za * zb;
  return Superoperator::from_action([&](const Matrix4c& rho) -> Matrix4c {
    return -2.0 * gamma0 * (zz * rho - zb * rho * za + rho * zz - za * rho * zb);
  });
}

// Index pairs of the packed off-diagonal entries.
constexpr std::array<std::array<int, 2>, 6> kUpper = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

// Constant-coefficient linear system x' = A x sampled on a grid.
template <int N>
class LinearStepper {
 public:
  using Vec = Eigen::Matrix<double, N, 1>;
  using Mat = Eigen::Matrix<double, N, N>;

  LinearStepper(const Mat& a, const IntegratorConfig& cfg, double h_max)
      : a_(a), cfg_(cfg), h_max_(h_max), h_(h_max) {}

  // Advances x from t to t_end exactly.
  void advance(Vec& x, double t, double t_end) {
    if (cfg_.method == IntegratorMethod::ClassicalRK4) {
      advance_rk4(x, t, t_end);
    } else {
      advance_dopri(x, t, t_end);
    }
  }

 private:
  void advance_rk4(Vec& x, double t, double t_end) {
    const double span = t_end - t;
    if (span <= 0.0) return;
    const auto steps = static_cast<long>(std::ceil(span / h_max_ - 1e-12));
    const double h = span / static_cast<double>(std::max(1L, steps));
    for (long s = 0; s < std::max(1L, steps); ++s) {
      const Vec k1 = a_ * x;
      const Vec k2 = a_ * (x + 0.5 * h * k1);
      const Vec k3 = a_ * (x + 0.5 * h * k2);
      const Vec k4 = a_ * (x + h * k3);
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }

  void advance_dopri(Vec& x, double t, double t_end) {
    while (t < t_end) {
      const double remaining = t_end - t;
      // Swallow a remnant that would otherwise leave a sliver step behind.
      const bool last = h_ >= remaining * (1.0 - 1e-9);
      const double h = last ? remaining : h_;
      if (h_ < 1e-14 * std::max(1.0, std::abs(t))) {
        throw StepSizeUnderflow("adaptive step size underflow at t = " + std::to_string(t));
      }
      const Vec k1 = a_ * x;
      const Vec k2 = a_ * (x + h * (a21 * k1));
      const Vec k3 = a_ * (x + h * (a31 * k1 + a32 * k2));
      const Vec k4 = a_ * (x + h * (a41 * k1 + a42 * k2 + a43 * k3));
      const Vec k5 = a_ * (x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const Vec k6 = a_ * (x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const Vec next = x + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const Vec k7 = a_ * next;
      const Vec err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      double norm = 0.0;
      for (int i = 0; i < N; ++i) {
        const double scale = cfg_.abs_tol + cfg_.rel_tol * std::max(std::abs(x(i)), std::abs(next(i)));
        norm += (err(i) / scale) * (err(i) / scale);
      }
      norm = std::sqrt(norm / N);

      const double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
      if (norm <= 1.0) {
        x = next;
        t = last ? t_end : t + h;
        // A step clipped to hit the grid says nothing about the natural size.
        if (!last || factor < 1.0) h_ = std::min(h_max_, h * factor);
      } else {
        h_ = std::min(h_max_, h * factor);
      }
    }
  }

  Mat a_;
  IntegratorConfig cfg_;
  double h_max_;
  double h_;
};

void check_grid(std::span<const double> t_grid) {
  if (t_grid.empty()) throw DomainError("time grid is empty");
  if (t_grid.front() != 0.0) throw DomainError("time grid must start at t = 0");
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    if (!(t_grid[k] >= t_grid[k - 1]) || !std::isfinite(t_grid[k])) {
      throw DomainError("time grid must be finite and non-decreasing");
    }
  }
}

void check_config(const IntegratorConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || !(cfg.max_step > 0.0)) {
    throw DomainError("integrator tolerances and max_step must be > 0");
  }
}

template <int N, typename Pack, typename Unpack>
std::vector<DensityMatrix> integrate(const DensityMatrix& rho0, std::span<const double> t_grid,
                                     const Eigen::Matrix<double, N, N>& a, const IntegratorConfig& cfg,
                                     double h_max, Pack pack_fn, Unpack unpack_fn) {
  LinearStepper<N> stepper(a, cfg, h_max);
  Eigen::Matrix<double, N, 1> x = pack_fn(rho0);
  std::vector<DensityMatrix> states;
  states.reserve(t_grid.size());
  states.push_back(rho0);
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    stepper.advance(x, t_grid[k - 1], t_grid[k]);
    states.push_back(unpack_fn(x));
  }
  return states;
}

}  // namespace

DensityMatrix Superoperator::operator()(const DensityMatrix& rho) const {
  Eigen::Matrix<Complex, 16, 1> vec;
  for (int r = 0; r < 16; ++r) vec(r) = rho(r / 4, r % 4);
  const Eigen::Matrix<Complex, 16, 1> out = m_ * vec;
  DensityMatrix result;
  for (int r = 0; r < 16; ++r) result(r / 4, r % 4) = out(r);
  return result;
}

namespace ops {
Matrix4c raise_a() { return kron(sigma_plus(), Eigen::Matrix2cd::Identity()); }
Matrix4c raise_b() { return kron(Eigen::Matrix2cd::Identity(), sigma_plus()); }
Matrix4c lower_a() { return raise_a().adjoint(); }
Matrix4c lower_b() { return raise_b().adjoint(); }
Matrix4c sz_a() { return kron(spin_z(), Eigen::Matrix2cd::Identity()); }
Matrix4c sz_b() { return kron(Eigen::Matrix2cd::Identity(), spin_z()); }

Matrix4c hamiltonian(const SystemParams& params) {
  return params.omega0 * (sz_a() + sz_b()) + params.v * (raise_a() * lower_b() + raise_b() * lower_a());
}
}  // namespace ops

Superoperator hamiltonian_part(const SystemParams& params) {
  const Matrix4c h = ops::hamiltonian(params);
  return Superoperator::from_action(
      [&](const Matrix4c& rho) -> Matrix4c { return -kI * (h * rho - rho * h); });
}

Superoperator dissipator(const EnvironmentSpec& env) {
  validate_environment(env);
  const Matrix4c up[2] = {ops::raise_a(), ops::raise_b()};
  const Matrix4c down[2] = {ops::lower_a(), ops::lower_b()};
  Superoperator l;
  switch (env.model) {
    case EnvironmentModel::Dissipative:
      l += decay_term(up[0], down[0], env.gamma_a);
      l += decay_term(up[1], down[1], env.gamma_b);
      break;
    case EnvironmentModel::CorrelatedDecay: {
      // Rate matrix: diagonal gamma_a, gamma_b; both cross entries gamma_corr.
      const double rates[2][2] = {{env.gamma_a, env.gamma_corr}, {env.gamma_corr, env.gamma_b}};
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) l += decay_term(up[j], down[k], rates[j][k]);
      break;
    }
    case EnvironmentModel::PureDephasing:
      l += dephasing_term(ops::sz_a(), env.big_gamma_a);
      l += dephasing_term(ops::sz_b(), env.big_gamma_b);
      break;
    case EnvironmentModel::CorrelatedDephasing:
      l += dephasing_term(ops::sz_a(), env.big_gamma_a);
      l += dephasing_term(ops::sz_b(), env.big_gamma_b);
      l += correlated_dephasing_term(env.gamma0);
      break;
  }
  return l;
}

Superoperator generator(const SystemParams& params, const EnvironmentSpec& env) {
  return hamiltonian_part(params) + dissipator(env);
}

PackedState pack(const DensityMatrix& rho) {
  PackedState x;
  for (int i = 0; i < 4; ++i) x(i) = rho(i, i).real();
  for (int p = 0; p < 6; ++p) {
    const auto [i, j] = kUpper[p];
    const Complex h = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
    x(4 + 2 * p) = h.real();
    x(5 + 2 * p) = h.imag();
  }
  return x;
}

DensityMatrix unpack(const PackedState& x) {
  DensityMatrix rho;
  for (int i = 0; i < 4; ++i) rho(i, i) = x(i);
  for (int p = 0; p < 6; ++p) {
    const auto [i, j] = kUpper[p];
    rho(i, j) = Complex(x(4 + 2 * p), x(5 + 2 * p));
    rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

PackedGenerator packed_generator(const Superoperator& generator) {
  PackedGenerator a;
  for (int k = 0; k < 16; ++k) {
    PackedState unit = PackedState::Zero();
    unit(k) = 1.0;
    a.col(k) = pack(generator(unpack(unit)));
  }
  return a;
}

double characteristic_rate(const SystemParams& params, const EnvironmentSpec& env) {
  const double rate = std::max({2.0 * std::abs(params.v), 2.0 * std::abs(params.omega0), env.max_rate()});
  return rate > 0.0 ? rate : 1.0;
}

Trajectory evolve(const DensityMatrix& rho0, const SystemParams& params, const EnvironmentSpec& env,
                  std::span<const double> t_grid, const IntegratorConfig& cfg) {
  check_grid(t_grid);
  check_config(cfg);
  if (!std::isfinite(params.omega0) || !std::isfinite(params.v)) {
    throw ModelParameterError("omega0 and v must be finite");
  }
  const Diagnostics d0 = validate(rho0);
  if (d0.hermiticity_error > 1e-10 || d0.min_eigenvalue < kPositivityTol ||
      d0.trace_error > cfg.trace_error_limit) {
    throw DomainError("initial state is not a valid density matrix");
  }

  const Superoperator l = generator(params, env);
  const double h_max = cfg.max_step / characteristic_rate(params, env);

  std::vector<DensityMatrix> states;
  if (cfg.hermitize_each_step) {
    states = integrate<16>(rho0, t_grid, packed_generator(l), cfg, h_max,
                           [](const DensityMatrix& r) { return pack(r); },
                           [](const PackedState& x) { return unpack(x); });
  } else {
    // Real form of the complex 16x16 action: [Re -Im; Im Re].
    Eigen::Matrix<double, 32, 32> a;
    a << l.matrix().real(), -l.matrix().imag(), l.matrix().imag(), l.matrix().real();
    auto to_real = [](const DensityMatrix& r) {
      Eigen::Matrix<double, 32, 1> x;
      for (int k = 0; k < 16; ++k) {
        x(k) = r(k / 4, k % 4).real();
        x(16 + k) = r(k / 4, k % 4).imag();
      }
      return x;
    };
    auto from_real = [](const Eigen::Matrix<double, 32, 1>& x) {
      DensityMatrix r;
      for (int k = 0; k < 16; ++k) r(k / 4, k % 4) = Complex(x(k), x(16 + k));
      return r;
    };
    states = integrate<32>(rho0, t_grid, a, cfg, h_max, to_real, from_real);
  }

  Trajectory traj = make_trajectory(std::vector<double>(t_grid.begin(), t_grid.end()), std::move(states));
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (traj.diagnostics[k].trace_error > cfg.trace_error_limit) {
      throw DiagnosticsExceeded("trace error " + std::to_string(traj.diagnostics[k].trace_error) +
                                " exceeds limit at t = " + std::to_string(traj.times[k]));
    }
  }
  return traj;
}

}  // namespace esdlab
