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

#include "qdiscord/states.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace qdiscord {

Eigen::Index dims_product(const Dims& dims) {
  Eigen::Index n = 1;
  for (auto d : dims) {
    if (d < 1) throw PreconditionError("subsystem dimension must be at least 1");
    n *= d;
  }
  return n;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Dims dims) : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (dims_.empty()) throw PreconditionError("DensityMatrix: empty dims");
  if (matrix_.rows() != matrix_.cols()) throw PreconditionError("DensityMatrix: matrix is not square");
  if (dims_product(dims_) != matrix_.rows()) {
    throw PreconditionError("DensityMatrix: dims product " + std::to_string(dims_product(dims_)) +
                            " does not match matrix size " + std::to_string(matrix_.rows()));
  }
  if (!matrix_.allFinite()) throw PreconditionError("DensityMatrix: non-finite entries");
  if (hermiticity_residual(matrix_) > 1e-9) throw PreconditionError("DensityMatrix: matrix is not Hermitian");
  if (std::abs(matrix_.trace() - Complex(1.0)) > 1e-10) {
    throw PreconditionError("DensityMatrix: trace " + std::to_string(matrix_.trace().real()) + " is not 1");
  }
  matrix_ = (matrix_ + matrix_.adjoint()).eval() / 2.0;
  const auto eig = herm_eig(matrix_);
  if (eig.eigenvalues(0) < -1e-10) {
    throw PreconditionError("DensityMatrix: negative eigenvalue " + std::to_string(eig.eigenvalues(0)));
  }
  if (eig.eigenvalues(0) < 0.0) {
    RealVector clamped = eig.eigenvalues.cwiseMax(0.0);
    clamped /= clamped.sum();
    matrix_ = eig.eigenvectors * clamped.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
  }
}

DensityMatrix DensityMatrix::from_unnormalized(const ComplexMatrix& m, Dims dims) {
  const double tr = m.trace().real();
  if (!(tr > 0.0)) throw PreconditionError("DensityMatrix: operator has non-positive trace");
  return DensityMatrix(m / tr, std::move(dims));
}

DensityMatrix DensityMatrix::reduced_a() const {
  return DensityMatrix(partial_trace(matrix_, dim_a(), dim_rest(), Subsystem::B), Dims{dim_a()});
}

DensityMatrix DensityMatrix::reduced_b() const {
  Dims rest(dims_.begin() + 1, dims_.end());
  if (rest.empty()) rest.push_back(1);
  return DensityMatrix(partial_trace(matrix_, dim_a(), dim_rest(), Subsystem::A), rest);
}

DensityMatrix swap_subsystems(const DensityMatrix& rho) {
  const Eigen::Index da = rho.dim_a();
  const Eigen::Index db = rho.dim_rest();
  ComplexMatrix out(rho.dim(), rho.dim());
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index b = 0; b < db; ++b)
      for (Eigen::Index a2 = 0; a2 < da; ++a2)
        for (Eigen::Index b2 = 0; b2 < db; ++b2) out(b * da + a, b2 * da + a2) = rho.matrix()(a * db + b, a2 * db + b2);
  return DensityMatrix(std::move(out), Dims{db, da});
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

PureState::PureState(ComplexVector amplitudes, Dims dims) : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (dims_.empty()) throw PreconditionError("PureState: empty dims");
  if (dims_product(dims_) != amplitudes_.size()) throw PreconditionError("PureState: dims do not match vector size");
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10) throw PreconditionError("PureState: vector is not normalized");
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint(), dims_);
}

void SpectralDecomposition::validate() const {
  if (weights.size() != vectors.size() || weights.empty()) {
    throw PreconditionError("SpectralDecomposition: weights and vectors differ in length or are empty");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw PreconditionError("SpectralDecomposition: non-positive weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) throw PreconditionError("SpectralDecomposition: weights do not sum to 1");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].dims() != vectors.front().dims()) throw PreconditionError("SpectralDecomposition: mixed dims");
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (std::abs(vectors[i].amplitudes().dot(vectors[j].amplitudes())) > 1e-9) {
        throw PreconditionError("SpectralDecomposition: vectors are not orthogonal");
      }
    }
  }
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  const Eigen::Index n = vectors.front().dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out += weights[i] * vectors[i].amplitudes() * vectors[i].amplitudes().adjoint();
  }
  return out;
}

void Ensemble::validate() const {
  if (weights.size() != states.size() || weights.empty()) {
    throw PreconditionError("Ensemble: weights and states differ in length or are empty");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw PreconditionError("Ensemble: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) throw PreconditionError("Ensemble: weights do not sum to 1");
  for (const auto& s : states) {
    if (s.dims() != states.front().dims()) throw PreconditionError("Ensemble: members have different dims");
  }
}

DensityMatrix Ensemble::mixture() const {
  validate();
  ComplexMatrix m = ComplexMatrix::Zero(states.front().dim(), states.front().dim());
  for (std::size_t i = 0; i < weights.size(); ++i) m += weights[i] * states[i].matrix();
  return DensityMatrix::from_unnormalized(m, states.front().dims());
}

ComplexVector SchmidtDecomposition::reconstruct() const {
  ComplexVector out = ComplexVector::Zero(left_vectors.front().dim() * right_vectors.front().dim());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    out += coefficients[i] * kron(left_vectors[i].amplitudes(), right_vectors[i].amplitudes());
  }
  return out;
}

SpectralDecomposition spectral_decomposition(const DensityMatrix& rho) {
  const auto eig = herm_eig(rho.matrix());
  SpectralDecomposition d;
  double total = 0.0;
  // Descending weight order.
  for (Eigen::Index k = eig.eigenvalues.size() - 1; k >= 0; --k) {
    if (eig.eigenvalues(k) <= kRankCutoff) continue;
    d.weights.push_back(eig.eigenvalues(k));
    d.vectors.emplace_back(eig.eigenvectors.col(k).normalized(), rho.dims());
    total += eig.eigenvalues(k);
  }
  for (double& w : d.weights) w /= total;
  return d;
}

PureState purify(const SpectralDecomposition& d) {
  d.validate();
  const auto rank = static_cast<Eigen::Index>(d.weights.size());
  const Eigen::Index n = d.vectors.front().dim();
  ComplexVector psi = ComplexVector::Zero(n * rank);
  for (Eigen::Index i = 0; i < rank; ++i) {
    psi += std::sqrt(d.weights[static_cast<std::size_t>(i)]) *
           kron(d.vectors[static_cast<std::size_t>(i)].amplitudes(), ComplexVector::Unit(rank, i));
  }
  Dims dims = d.vectors.front().dims();
  dims.push_back(rank);
  return PureState(psi.normalized(), std::move(dims));
}

PureState purify(const DensityMatrix& rho) { return purify(spectral_decomposition(rho)); }

SchmidtDecomposition schmidt(const PureState& psi, std::size_t cut) {
  if (cut == 0 || cut >= psi.dims().size()) throw PreconditionError("schmidt: cut must split dims into two parts");
  const Dims left(psi.dims().begin(), psi.dims().begin() + static_cast<std::ptrdiff_t>(cut));
  const Dims right(psi.dims().begin() + static_cast<std::ptrdiff_t>(cut), psi.dims().end());
  const Eigen::Index dl = dims_product(left);
  const Eigen::Index dr = dims_product(right);
  // Coefficient matrix C with psi = Σ C(l, r) |l⟩|r⟩; ρ_left = C C†.
  ComplexMatrix c(dl, dr);
  for (Eigen::Index l = 0; l < dl; ++l)
    for (Eigen::Index r = 0; r < dr; ++r) c(l, r) = psi.amplitudes()(l * dr + r);
  const auto eig = herm_eig(ComplexMatrix(c * c.adjoint()));
  SchmidtDecomposition out;
  for (Eigen::Index k = eig.eigenvalues.size() - 1; k >= 0; --k) {
    if (eig.eigenvalues(k) <= kRankCutoff) continue;
    const double coeff = std::sqrt(eig.eigenvalues(k));
    const ComplexVector l = eig.eigenvectors.col(k).normalized();
    // ⟨l| ⊗ I applied to psi.
    ComplexVector r = c.transpose() * l.conjugate() / coeff;
    out.coefficients.push_back(coeff);
    out.left_vectors.emplace_back(l, left);
    out.right_vectors.emplace_back(r.normalized(), right);
  }
  return out;
}

namespace {

ComplexMatrix coefficient_matrix(const PureState& s) {
  const Eigen::Index da = s.dims().front();
  const Eigen::Index db = s.dim() / da;
  ComplexMatrix c(da, db);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index b = 0; b < db; ++b) c(a, b) = s.amplitudes()(a * db + b);
  return c;
}

}  // namespace

ComplexMatrix cross_trace_over_a(const PureState& u, const PureState& v) {
  if (u.dims() != v.dims()) throw PreconditionError("cross_trace_over_a: dims differ");
  return coefficient_matrix(u).transpose() * coefficient_matrix(v).conjugate();
}

ComplexMatrix cross_trace_over_b(const PureState& u, const PureState& v) {
  if (u.dims() != v.dims()) throw PreconditionError("cross_trace_over_b: dims differ");
  return coefficient_matrix(u) * coefficient_matrix(v).adjoint();
}

}  // namespace qdiscord
