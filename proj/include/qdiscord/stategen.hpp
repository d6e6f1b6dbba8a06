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
#include <optional>
#include <string>
#include <vector>

namespace qdiscord {

enum class Family {
  random_density,
  random_pure,
  condition_pure_family,
  orthogonal_mixed_family,
  classical_quantum,
  product,
};

std::string to_string(Family f);
Family family_from_string(const std::string& name);

/// Minimum pairwise gap enforced on randomly drawn member weights.
inline constexpr double kWeightGap = 0.05;

struct GenSpec {
  Family family = Family::random_density;
  Dims dims{2, 2};
  /// A-subspace dimension per member (block families). Blocks occupy
  /// consecutive canonical A-basis vectors. Empty: two equal blocks.
  std::vector<Eigen::Index> block_dims;
  /// Member weights. Empty: drawn at random (with kWeightGap separation for
  /// block families and violating pairs).
  std::vector<double> weights;
  /// Optional per-member q for condition_pure_family members
  /// |u_i⟩ = √q |o_i, 0⟩ + √(1-q) |o_i + 1, 1⟩, o_i the block offset.
  std::vector<double> schmidt_weights;
  /// Rank of random_density states and mixed members; 0 means full rank.
  Eigen::Index rank = 0;
  /// gen_violating: use the Bell pair |Φ+⟩, |Ψ+⟩ instead of a random pair.
  bool bell_pair = false;
  std::uint64_t seed = 0;
};

struct Generated {
  DensityMatrix state;
  std::optional<SpectralDecomposition> decomposition;
  std::optional<Ensemble> ensemble;
};

/// Deterministic in the spec: equal specs give bit-identical states.
Generated gen(const GenSpec& spec);

/// Rank-two state whose two eigenvectors share A-support, so that
/// ||Tr_A |u_1⟩⟨u_2||| >= 1e-2. Requires a bipartite spec with dB >= 2.
Generated gen_violating(const GenSpec& spec);

/// Qubit trine: effects (2/3)|ψ_k⟩⟨ψ_k| at Bloch angles 0, 2π/3, 4π/3.
Povm trine_povm();

/// Seeded full-rank POVM: Ginibre effects G_x G_x† normalized by S^{-1/2}.
Povm random_povm(Eigen::Index dim, std::size_t outcomes, std::uint64_t seed);

}  // namespace qdiscord
