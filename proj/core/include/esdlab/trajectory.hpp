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

#include <cstddef>
#include <vector>

#include "esdlab/qstate.hpp"

namespace esdlab {

// Sampled time evolution. concurrence[k] = max(0, ctilde[k]).
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<double> concurrence;
  std::vector<double> ctilde;
  std::vector<Diagnostics> diagnostics;

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
  double horizon() const { return times.empty() ? 0.0 : times.back(); }
};

// Signed pre-concurrence used for trajectories: the X-state formula when rho
// is an X state with rho_14 = 0, the signed Wootters quantity
// sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4) otherwise.
double signed_concurrence(const DensityMatrix& rho);

// Fills concurrence, ctilde and diagnostics from times/states.
Trajectory make_trajectory(std::vector<double> times, std::vector<DensityMatrix> states);

// Evenly spaced grid 0, t_max/(samples-1), ..., t_max.
std::vector<double> uniform_grid(double t_max, std::size_t samples);

}  // namespace esdlab
