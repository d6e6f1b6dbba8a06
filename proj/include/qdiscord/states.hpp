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

#include <cstddef>
#include <vector>

namespace qdiscord {

/// Eigenvalues at or below this value are treated as zero when deciding
/// numerical rank (spectral support, purifier dimension, Schmidt rank).
inline constexpr double kRankCutoff = 1e-12;

using Dims = std::vector<Eigen::Index>;

Eigen::Index dims_product(const Dims& dims);

/// Hermitian, positive semidefinite, unit-trace operator on a tensor product
/// of subsystems with the given dimensions.
///
/// Construction validates: hermiticity within 1e-9, trace within 1e-10 of one,
/// no eigenvalue below -1e-10. Eigenvalues in [-1e-10, 0) are clamped to zero
/// and the matrix renormalized.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, Dims dims);

  /// Divides a nonzero PSD operator by its trace before validating.
  static DensityMatrix from_unnormalized(const ComplexMatrix& m, Dims dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  Eigen::Index dim_a() const { return dims_.front(); }
  /// Dimension of everything after the first factor.
  Eigen::Index dim_rest() const { return dim() / dims_.front(); }

  /// Reduced state on the first factor (A).
  DensityMatrix reduced_a() const;
  /// Reduced state on everything after the first factor (B).
  DensityMatrix reduced_b() const;

 private:
  ComplexMatrix matrix_;
  Dims dims_;
};

/// Exchanges the factors of a bipartite state: ρ_AB -> ρ_BA. For more than two
/// factors the cut is taken after the first one.
DensityMatrix swap_subsystems(const DensityMatrix& rho);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

class PureState {
 public:
  PureState(ComplexVector amplitudes, Dims dims);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  DensityMatrix projector() const;

 private:
  ComplexVector amplitudes_;
  Dims dims_;
};

struct SpectralDecomposition {
  std::vector<double> weights;
  std::vector<PureState> vectors;

  /// Checks weights (positive, summing to one) and orthonormality of vectors.
  void validate() const;
  ComplexMatrix reconstruct() const;
};

struct Ensemble {
  std::vector<double> weights;
  std::vector<DensityMatrix> states;

  void validate() const;
  DensityMatrix mixture() const;
};

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending
  std::vector<PureState> left_vectors;
  std::vector<PureState> right_vectors;

  ComplexVector reconstruct() const;
};

SpectralDecomposition spectral_decomposition(const DensityMatrix& rho);

/// |Ψ⟩ = Σ_i √p_i |u_i⟩ ⊗ |i⟩_C; output dims are the input dims followed by the
/// rank of the decomposition.
PureState purify(const SpectralDecomposition& d);
PureState purify(const DensityMatrix& rho);

/// Schmidt decomposition across the cut after the first `cut` factors.
SchmidtDecomposition schmidt(const PureState& psi, std::size_t cut);

/// Tr_A |u⟩⟨v| for vectors on H_A ⊗ H_B, with H_A the first factor.
ComplexMatrix cross_trace_over_a(const PureState& u, const PureState& v);
/// Tr_B |u⟩⟨v| for vectors on H_A ⊗ H_B, with H_A the first factor.
ComplexMatrix cross_trace_over_b(const PureState& u, const PureState& v);

}  // namespace qdiscord
