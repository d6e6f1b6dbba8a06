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

#include "qdiscord/measurements.hpp"
#include "qdiscord/states.hpp"

#include <span>
#include <vector>

namespace qdiscord {

/// Probabilities at or below this floor contribute nothing to an entropy.
inline constexpr double kProbabilityFloor = 1e-15;

/// Nonnegative values summing to one within 1e-10.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// -Σ p log2 p over values above the floor. Accepts unnormalized nonnegative
/// input; no validation.
double entropy_terms(std::span<const double> values);

/// Entropies are in bits.
double shannon(const ProbDist& p);
double von_neumann(const DensityMatrix& rho);

/// Σ_x η_x S(ρ_{B|x}) for a measurement on A.
double conditional_entropy(const DensityMatrix& rho_ab, const Povm& m);
double conditional_entropy(const DensityMatrix& rho_ab, const ProjectiveMeasurement& m);

/// I(A:B) = S(ρ_A) + S(ρ_B) - S(ρ_AB).
double mutual_information(const DensityMatrix& rho_ab);

/// H({η_i}) + Σ η_i S(ρ_i) - S(Σ η_i ρ_i); nonnegative, zero iff supports are
/// mutually orthogonal.
double ensemble_entropy_gap(const Ensemble& e);

}  // namespace qdiscord
