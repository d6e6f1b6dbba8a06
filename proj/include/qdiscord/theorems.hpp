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

#include "qdiscord/conditions.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/states.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdiscord {

/// Zero-minimum bound used when a vanishing conditional entropy is expected.
inline constexpr double kZeroMinimumTolerance = 1e-5;
/// Floor a conditional-entropy minimum must clear when it is expected positive.
inline constexpr double kPositiveMinimumFloor = 1e-6;
/// Agreement among optimized discord-type quantities.
inline constexpr double kOptimizedAgreement = 1e-4;
/// Saturation min = S(ρ_AB) tolerance, and the cross-term bound checked then.
inline constexpr double kSaturationTolerance = 1e-5;
inline constexpr double kSaturationCrossTolerance = 1e-6;
/// Agreement between ρ_BC and its flagged reconstruction.
inline constexpr double kFlaggedReconstructionTolerance = 1e-8;
/// Weights closer than this share an eigenspace; the eigenbasis inside it is
/// not unique, so a violated condition does not imply a positive minimum.
inline constexpr double kDegeneracyTolerance = 1e-8;

enum class Outcome { passed, failed, inconclusive };

std::string to_string(Outcome o);

struct TheoremVerdict {
  std::string theorem_id;
  std::vector<std::pair<std::string, double>> quantities;
  double max_discrepancy = 0.0;
  double tolerance_used = 0.0;
  Outcome outcome = Outcome::inconclusive;
  bool passed = false;  // outcome == passed; then max_discrepancy <= tolerance_used
  std::string note;

  double quantity(const std::string& name) const;
};

/// Vanishing minimal conditional entropy exactly when the spectral vectors have
/// zero cross terms under Tr_A. Uses `decomposition` when supplied, else the
/// computed spectral decomposition. Violations between the condition tolerance
/// and the falsification threshold give an inconclusive verdict.
TheoremVerdict verify_thm1(const DensityMatrix& rho_ab, const OptimizerConfig& cfg,
                           const std::optional<SpectralDecomposition>& decomposition = std::nullopt);

/// Compares POVM discord, projective discord, eof_flagged, Σ p_i S(Tr_B u_i)
/// and the optimized Σ p_i D(u_i). Throws PreconditionError if the cross-term
/// condition fails.
TheoremVerdict verify_thm2(const DensityMatrix& rho_ab, const OptimizerConfig& cfg,
                           const std::optional<SpectralDecomposition>& decomposition = std::nullopt);

/// D(Σ p_i ρ_i) against Σ p_i D(ρ_i) (POVM discord). Throws PreconditionError
/// unless Tr_A(ρ_i ρ_j) = 0 for all member pairs.
TheoremVerdict verify_thm3(const Ensemble& e, const OptimizerConfig& cfg);

/// Whether the projective minimum reaches S(ρ_AB); when it does, checks
/// Tr_B |u_i⟩⟨u_j| = 0 across the spectral vectors.
TheoremVerdict check_saturation(const DensityMatrix& rho_ab, const OptimizerConfig& cfg,
                                const std::optional<SpectralDecomposition>& decomposition = std::nullopt);

/// Purifies ρ_AB to |Ψ⟩_ABC, checks that ρ_BC has the flagged form
/// Σ p_i Tr_A|u_i⟩⟨u_i| ⊗ |v_i⟩⟨v_i| and that discord measured on C vanishes.
TheoremVerdict verify_tripartite(const DensityMatrix& rho_ab, const OptimizerConfig& cfg,
                                 const std::optional<SpectralDecomposition>& decomposition = std::nullopt);

}  // namespace qdiscord
