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

#include "qdiscord/linalg.hpp"
#include "qdiscord/states.hpp"

#include <vector>

namespace qdiscord {

/// Probability below which an outcome is dropped from a conditional ensemble.
inline constexpr double kOutcomeCutoff = 1e-12;

/// General measurement {M_x}: Hermitian PSD effects summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> effects);

  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  Eigen::Index dim() const { return effects_.front().rows(); }
  std::size_t size() const { return effects_.size(); }

 private:
  std::vector<ComplexMatrix> effects_;
};

/// Von Neumann measurement: mutually orthogonal projectors summing to identity.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(std::vector<ComplexMatrix> projectors);

  /// Rank-one projectors onto the columns of a unitary.
  static ProjectiveMeasurement from_basis(const ComplexMatrix& unitary);

  const std::vector<ComplexMatrix>& projectors() const { return projectors_; }
  Eigen::Index dim() const { return projectors_.front().rows(); }
  std::size_t size() const { return projectors_.size(); }
  Povm as_povm() const { return Povm(projectors_); }

 private:
  std::vector<ComplexMatrix> projectors_;
};

class KrausSet {
 public:
  explicit KrausSet(std::vector<ComplexMatrix> operators);

  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  Povm effects() const;

 private:
  std::vector<ComplexMatrix> operators_;
};

/// {η_x, ρ_{B|x}} produced by measuring subsystem A.
struct ConditionalEnsemble {
  std::vector<double> probabilities;
  std::vector<DensityMatrix> states;
  /// Index of each kept entry in the measurement's outcome list.
  std::vector<std::size_t> outcomes;
};

ConditionalEnsemble apply_on_a(const DensityMatrix& rho_ab, const Povm& m);
ConditionalEnsemble apply_on_a(const DensityMatrix& rho_ab, const ProjectiveMeasurement& m);

/// A_x = √M_x (Hermitian square root).
KrausSet kraus_from_povm(const Povm& p);

/// The family {A_z† π_i A_z} obtained by refining a Kraus set with projectors.
Povm refine(const KrausSet& k, const ProjectiveMeasurement& pi);

/// Projective realization of a POVM on an enlarged system H_A ⊗ H_E.
struct NeumarkDilation {
  ComplexMatrix unitary;              // on H_A ⊗ H_E, A-index major
  PureState ancilla_state;            // |ε_0⟩ = |0⟩_E
  ProjectiveMeasurement ancilla_projectors;
  Eigen::Index ancilla_dim = 0;
};

/// Builds U from the isometry V|ψ⟩ = Σ_x (A_x|ψ⟩) ⊗ |x⟩_E with A_x = √M_x.
NeumarkDilation neumark_dilate(const Povm& p);

struct NeumarkResiduals {
  double kraus_action = 0.0;  // max_x ||Tr_E[(I⊗π_x) U(ρ⊗ε_0)U† (I⊗π_x)] - A_x ρ A_x†||_F
  double effects = 0.0;       // max_x ||⟨ε_0|U†(I⊗π_x)U|ε_0⟩ - M_x||_F
  double probabilities = 0.0; // max_x |Tr[U†(I⊗π_x)U ρ⊗ε_0] - Tr(M_x ρ)|
};

NeumarkResiduals neumark_residuals(const NeumarkDilation& dilation, const Povm& p, const DensityMatrix& rho);

/// ρ ⊗ |ε_0⟩⟨ε_0| regrouped as a bipartite state on (A⊗E) ⊗ B.
DensityMatrix extend_with_ancilla(const DensityMatrix& rho_ab, Eigen::Index ancilla_dim);

/// POVM on A induced by a measurement on A⊗E: M_x = ⟨ε_0|π_x|ε_0⟩.
Povm induced_povm(const ProjectiveMeasurement& on_ae, Eigen::Index ancilla_dim);

}  // namespace qdiscord
