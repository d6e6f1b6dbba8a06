// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qdiscord {

struct NelderMeadOptions {
  int max_iterations = 2000;
  double function_tolerance = 1e-10;
  double initial_step = 0.25;
  /// Fresh simplices built around the incumbent after convergence; stops early
  /// once a restart fails to improve by more than the tolerance.
  int max_restarts = 3;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free simplex minimization (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). Converged when the spread of simplex values
/// falls to the tolerance. An empty start vector is evaluated once.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, const NelderMeadOptions& opts);

}  // namespace qdiscord
