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

#include <span>
#include <utility>
#include <vector>

namespace qdiscord {

/// Index pairs (p, q), p < q, acted on by a chain of Givens rotations.
using GivensPairs = std::vector<std::pair<Eigen::Index, Eigen::Index>>;

/// All d(d-1)/2 pairs in row-major order.
GivensPairs all_pairs(Eigen::Index d);
/// Pairs with p < lead: the rotations that can move an isometry supported on
/// the first `lead` coordinates.
GivensPairs leading_pairs(Eigen::Index d, Eigen::Index lead);

/// Left-multiplies `m` by Π_k G_k(θ_k, φ_k) in place, where the rotation on
/// pair (p, q) is [[cos θ, -e^{iφ} sin θ], [e^{-iφ} sin θ, cos θ]] and params
/// holds (θ_0, φ_0, θ_1, φ_1, ...). The first pair ends up leftmost.
void apply_givens_chain(const GivensPairs& pairs, std::span<const double> params, ComplexMatrix& m);

/// diag(e^{i ψ_0}, ..., e^{i ψ_{d-1}}).
ComplexMatrix phase_layer(std::span<const double> phases);

/// U(d) element: Givens chain over all pairs times a diagonal phase layer.
/// Expects d(d-1) + d parameters.
ComplexMatrix unitary_from_params(Eigen::Index d, std::span<const double> params);

/// Parametrizes rank-one projective measurements on dimension d as
/// U = G(θ) U_0 with π_x = U|x⟩⟨x|U†. Phases on the right of U leave the
/// projectors unchanged, so only the d(d-1) Givens angles are free.
class ProjectiveParametrization {
 public:
  ProjectiveParametrization(Eigen::Index d, ComplexMatrix base);
  explicit ProjectiveParametrization(Eigen::Index d);

  std::size_t size() const { return 2 * pairs_.size(); }
  ComplexMatrix basis(std::span<const double> params) const;
  Eigen::Index dim() const { return d_; }

 private:
  Eigen::Index d_;
  GivensPairs pairs_;
  ComplexMatrix base_;
};

/// Parametrizes rank-one POVMs with k outcomes on dimension d through an
/// isometry V (k x d): M_z = V†|z⟩⟨z|V. V = G(θ) [Φ(ψ) B_0; 0] with Givens
/// rotations over the pairs touching the first d rows and a d-phase layer on
/// the base block B_0 (a d x d unitary). Total 2dk - d^2 parameters.
class PovmParametrization {
 public:
  PovmParametrization(Eigen::Index d, Eigen::Index outcomes, ComplexMatrix base);
  PovmParametrization(Eigen::Index d, Eigen::Index outcomes);

  std::size_t size() const { return 2 * pairs_.size() + static_cast<std::size_t>(d_); }
  ComplexMatrix isometry(std::span<const double> params) const;
  Eigen::Index dim() const { return d_; }
  Eigen::Index outcomes() const { return k_; }

 private:
  Eigen::Index d_;
  Eigen::Index k_;
  GivensPairs pairs_;
  ComplexMatrix base_;
};

}  // namespace qdiscord
