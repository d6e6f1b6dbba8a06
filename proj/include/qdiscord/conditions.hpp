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

#include "qdiscord/states.hpp"

#include <utility>
#include <vector>

namespace qdiscord {

/// A cross term at or below this norm counts as zero.
inline constexpr double kConditionTolerance = 1e-9;
/// A cross term at or above this norm counts as a definite violation.
inline constexpr double kFalsificationThreshold = 1e-3;

struct ConditionReport {
  bool holds = true;
  double max_violation = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> pair_indices;
};

/// ||Tr_A |u_i⟩⟨u_j|||_F over pairs i != j with both weights above the rank
/// cutoff. Zero cross terms mean the members live on mutually orthogonal
/// subspaces of A.
ConditionReport check_condition_pure(const SpectralDecomposition& d);

/// ||Tr_A(ρ_i ρ_j)||_F over pairs i != j with both weights above the rank cutoff.
ConditionReport check_condition_mixed(const Ensemble& e);

}  // namespace qdiscord
