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

#include <cstdint>
#include <variant>
#include <vector>

namespace qdiscord {

struct OptimizerConfig {
  int starts = 32;
  int max_iterations = 2000;
  double function_tolerance = 1e-10;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class PovmRoute { direct, neumark };
enum class MeasurementClass { projective, povm };

using Measurement = std::variant<ProjectiveMeasurement, Povm>;

/// Restarts whose minima lie within this distance of the best count as agreeing;
/// the result is converged when the best two restarts agree.
inline constexpr double kRestartAgreement = 1e-7;

struct MinimizationResult {
  double value = 0.0;             // conditional entropy at `measurement`, bits
  Measurement measurement;
  ComplexMatrix frame;            // basis unitary (projective) or isometry V (POVM)
  std::vector<double> parameters; // optimizer coordinates of the best restart
  std::vector<double> restart_values;
  int restarts_agreeing = 0;
  bool converged = false;
};

struct DiscordResult {
  double value = 0.0;  // bits
  Measurement optimal_measurement;
  double min_conditional_entropy = 0.0;
  int restarts_agreeing = 0;
  bool converged = false;
  std::vector<double> parameters;
  std::vector<double> restart_values;
};

/// min over rank-one projective measurements on A of Σ_x η_x S(ρ_{B|x}).
MinimizationResult min_conditional_entropy_projective(const DensityMatrix& rho_ab, const OptimizerConfig& cfg);

/// Same minimum over rank-one POVMs with dA^2 outcomes. One restart is seeded
/// with the projective optimum, so the POVM value never exceeds the projective one.
MinimizationResult min_conditional_entropy_povm(const DensityMatrix& rho_ab, const OptimizerConfig& cfg);

/// POVM minimum via projective measurements on ρ_AB ⊗ |ε_0⟩⟨ε_0| over A⊗E with
/// an ancilla of dimension dA^2. The reported measurement is the POVM it induces on A.
MinimizationResult min_conditional_entropy_neumark(const DensityMatrix& rho_ab, const OptimizerConfig& cfg);

/// S(ρ_A) - S(ρ_AB) + min projective conditional entropy.
DiscordResult discord_projective(const DensityMatrix& rho_ab, const OptimizerConfig& cfg);
DiscordResult discord_povm(const DensityMatrix& rho_ab, const OptimizerConfig& cfg, PovmRoute route = PovmRoute::direct);

/// J_{B|A} = S(ρ_B) - min conditional entropy.
double classical_correlations(const DensityMatrix& rho_ab, const OptimizerConfig& cfg, MeasurementClass variant);

/// S(Tr_B |ψ⟩⟨ψ|) for a bipartite pure state.
double entanglement_entropy(const PureState& psi);

/// Σ p_i S(Tr_B |u_i⟩⟨u_i|) for a decomposition whose members sit on mutually
/// orthogonal A-subspaces; throws PreconditionError otherwise.
double eof_flagged(const SpectralDecomposition& d);

/// Entanglement of formation of a two-qubit state from its concurrence.
double eof_two_qubit_oracle(const DensityMatrix& rho);
double concurrence(const DensityMatrix& rho);

/// Binary entropy h(p) in bits.
double binary_entropy(double p);

}  // namespace qdiscord
