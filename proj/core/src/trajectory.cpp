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

#include "esdlab/trajectory.hpp"

#include <algorithm>

#include "esdlab/entanglement.hpp"

namespace esdlab {

double signed_concurrence(const DensityMatrix& rho) {
  if (rho.is_x_form(1e-10) && std::abs(rho(basis::ee, basis::gg)) <= 1e-10) {
    return concurrence_xstate(rho);
  }
  return wootters_signed(rho);
}

Trajectory make_trajectory(std::vector<double> times, std::vector<DensityMatrix> states) {
  Trajectory traj;
  traj.times = std::move(times);
  traj.states = std::move(states);
  const std::size_t n = traj.states.size();
  traj.concurrence.reserve(n);
  traj.ctilde.reserve(n);
  traj.diagnostics.reserve(n);
  for (const auto& rho : traj.states) {
    const double ct = signed_concurrence(rho);
    traj.ctilde.push_back(ct);
    traj.concurrence.push_back(std::max(0.0, ct));
    traj.diagnostics.push_back(validate(rho));
  }
  return traj;
}

std::vector<double> uniform_grid(double t_max, std::size_t samples) {
  std::vector<double> grid(samples);
  if (samples == 1) {
    grid[0] = 0.0;
    return grid;
  }
  const double dt = t_max / static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k) grid[k] = dt * static_cast<double>(k);
  grid.back() = t_max;
  return grid;
}

}  // namespace esdlab
