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

#include "qdiscord/measurements.hpp"

#include <algorithm>
#include <cmath>

namespace qdiscord {

namespace {

constexpr double kMeasurementTol = 1e-9;

void check_square_family(const std::vector<ComplexMatrix>& ops, const char* what) {
  if (ops.empty()) throw PreconditionError(std::string(what) + ": no operators");
  const Eigen::Index d = ops.front().rows();
  for (const auto& op : ops) {
    if (op.rows() != d || op.cols() != d) throw PreconditionError(std::string(what) + ": operators differ in shape");
    if (!op.allFinite()) throw PreconditionError(std::string(what) + ": non-finite entries");
  }
}

ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
  check_square_family(effects_, "Povm");
  ComplexMatrix sum = ComplexMatrix::Zero(dim(), dim());
  for (const auto& m : effects_) {
    if (hermiticity_residual(m) > kMeasurementTol) throw PreconditionError("Povm: effect is not Hermitian");
    if (herm_eig(m).eigenvalues(0) < -kMeasurementTol) throw PreconditionError("Povm: effect is not PSD");
    sum += m;
  }
  if ((sum - identity(dim())).norm() > kMeasurementTol) throw PreconditionError("Povm: effects do not sum to I");
}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<ComplexMatrix> projectors)
    : projectors_(std::move(projectors)) {
  check_square_family(projectors_, "ProjectiveMeasurement");
  ComplexMatrix sum = ComplexMatrix::Zero(dim(), dim());
  for (std::size_t x = 0; x < projectors_.size(); ++x) {
    const auto& p = projectors_[x];
    if (hermiticity_residual(p) > kMeasurementTol) {
      throw PreconditionError("ProjectiveMeasurement: projector is not Hermitian");
    }
    if ((p * p - p).norm() > kMeasurementTol) throw PreconditionError("ProjectiveMeasurement: not idempotent");
    for (std::size_t y = x + 1; y < projectors_.size(); ++y) {
      if ((p * projectors_[y]).norm() > kMeasurementTol) {
        throw PreconditionError("ProjectiveMeasurement: projectors are not mutually orthogonal");
      }
    }
    sum += p;
  }
  if ((sum - identity(dim())).norm() > kMeasurementTol) {
    throw PreconditionError("ProjectiveMeasurement: projectors do not sum to I");
  }
}

ProjectiveMeasurement ProjectiveMeasurement::from_basis(const ComplexMatrix& unitary) {
  std::vector<ComplexMatrix> ps;
  ps.reserve(static_cast<std::size_t>(unitary.cols()));
  for (Eigen::Index x = 0; x < unitary.cols(); ++x) ps.emplace_back(unitary.col(x) * unitary.col(x).adjoint());
  return ProjectiveMeasurement(std::move(ps));
}

KrausSet::KrausSet(std::vector<ComplexMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw PreconditionError("KrausSet: no operators");
  const Eigen::Index d = operators_.front().cols();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& a : operators_) {
    if (a.cols() != d) throw PreconditionError("KrausSet: operators differ in input dimension");
    sum += a.adjoint() * a;
  }
  if ((sum - identity(d)).norm() > kMeasurementTol) throw PreconditionError("KrausSet: Σ A†A != I");
}

Povm KrausSet::effects() const {
  std::vector<ComplexMatrix> ms;
  for (const auto& a : operators_) ms.emplace_back(a.adjoint() * a);
  return Povm(std::move(ms));
}

ConditionalEnsemble apply_on_a(const DensityMatrix& rho_ab, const Povm& m) {
  const Eigen::Index da = rho_ab.dim_a();
  const Eigen::Index db = rho_ab.dim_rest();
  if (m.dim() != da) throw PreconditionError("apply_on_a: measurement dimension does not match subsystem A");
  Dims b_dims(rho_ab.dims().begin() + 1, rho_ab.dims().end());
  if (b_dims.empty()) b_dims.push_back(1);
  ConditionalEnsemble out;
  for (std::size_t x = 0; x < m.size(); ++x) {
    const ComplexMatrix& eff = m.effects()[x];
    // Tr_A[(M⊗I)ρ] = Σ_{a,a'} M(a',a) ρ_{(a,·),(a',·)}
    ComplexMatrix un = ComplexMatrix::Zero(db, db);
    for (Eigen::Index a = 0; a < da; ++a)
      for (Eigen::Index a2 = 0; a2 < da; ++a2) {
        const Complex w = eff(a2, a);
        if (w != Complex(0.0)) un += w * rho_ab.matrix().block(a * db, a2 * db, db, db);
      }
    const double eta = un.trace().real();
    if (eta <= kOutcomeCutoff) continue;
    out.probabilities.push_back(eta);
    out.states.push_back(DensityMatrix::from_unnormalized((un + un.adjoint()) / 2.0, b_dims));
    out.outcomes.push_back(x);
  }
  return out;
}

ConditionalEnsemble apply_on_a(const DensityMatrix& rho_ab, const ProjectiveMeasurement& m) {
  return apply_on_a(rho_ab, m.as_povm());
}

KrausSet kraus_from_povm(const Povm& p) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(p.size());
  for (const auto& m : p.effects()) ops.push_back(psd_sqrt(m));
  return KrausSet(std::move(ops));
}

Povm refine(const KrausSet& k, const ProjectiveMeasurement& pi) {
  std::vector<ComplexMatrix> effects;
  for (const auto& a : k.operators()) {
    if (a.rows() != pi.dim()) throw PreconditionError("refine: projector dimension mismatch");
    for (const auto& p : pi.projectors()) effects.emplace_back(a.adjoint() * p * a);
  }
  return Povm(std::move(effects));
}

NeumarkDilation neumark_dilate(const Povm& p) {
  const Eigen::Index da = p.dim();
  const auto n = static_cast<Eigen::Index>(p.size());
  const KrausSet kraus = kraus_from_povm(p);
  // V((a, x), b) = A_x(a, b), AE index a * n + x.
  ComplexMatrix v = ComplexMatrix::Zero(da * n, da);
  for (Eigen::Index x = 0; x < n; ++x) {
    const auto& a_x = kraus.operators()[static_cast<std::size_t>(x)];
    for (Eigen::Index a = 0; a < da; ++a) v.row(a * n + x) = a_x.row(a);
  }
  const ComplexMatrix w = complete_to_unitary(v);
  // Place V's columns where |b⟩⊗|ε_0⟩ lands (index b * n), the completion elsewhere.
  ComplexMatrix u(da * n, da * n);
  Eigen::Index spare = da;
  for (Eigen::Index col = 0; col < da * n; ++col) {
    if (col % n == 0) {
      u.col(col) = w.col(col / n);
    } else {
      u.col(col) = w.col(spare++);
    }
  }
  std::vector<ComplexMatrix> pis;
  for (Eigen::Index x = 0; x < n; ++x) {
    ComplexMatrix pi = ComplexMatrix::Zero(n, n);
    pi(x, x) = 1.0;
    pis.push_back(std::move(pi));
  }
  return NeumarkDilation{std::move(u), PureState(ComplexVector::Unit(n, 0), Dims{n}),
                         ProjectiveMeasurement(std::move(pis)), n};
}

NeumarkResiduals neumark_residuals(const NeumarkDilation& dil, const Povm& p, const DensityMatrix& rho) {
  const Eigen::Index da = p.dim();
  const Eigen::Index n = dil.ancilla_dim;
  if (rho.dim() != da) throw PreconditionError("neumark_residuals: state dimension mismatch");
  const KrausSet kraus = kraus_from_povm(p);
  const ComplexMatrix eps = dil.ancilla_state.amplitudes() * dil.ancilla_state.amplitudes().adjoint();
  const ComplexMatrix evolved = dil.unitary * kron(rho.matrix(), eps) * dil.unitary.adjoint();
  // |ψ⟩ ↦ U(|ψ⟩⊗|ε_0⟩), a (da*n) x da isometry.
  const ComplexMatrix embed = dil.unitary * kron(identity(da), dil.ancilla_state.amplitudes());
  NeumarkResiduals r;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const ComplexMatrix lift = kron(identity(da), dil.ancilla_projectors.projectors()[x]);
    const ComplexMatrix post = lift * evolved * lift;
    const ComplexMatrix& a_x = kraus.operators()[x];
    r.kraus_action = std::max(r.kraus_action,
                              (partial_trace(post, da, n, Subsystem::B) - a_x * rho.matrix() * a_x.adjoint()).norm());
    r.effects = std::max(r.effects, (embed.adjoint() * lift * embed - p.effects()[x]).norm());
    const double prob_dilated = (lift * evolved).trace().real();
    const double prob_direct = (p.effects()[x] * rho.matrix()).trace().real();
    r.probabilities = std::max(r.probabilities, std::abs(prob_dilated - prob_direct));
  }
  return r;
}

DensityMatrix extend_with_ancilla(const DensityMatrix& rho_ab, Eigen::Index ancilla_dim) {
  const Eigen::Index da = rho_ab.dim_a();
  const Eigen::Index db = rho_ab.dim_rest();
  const Eigen::Index n = ancilla_dim;
  // Target ordering ((a, e), b) -> (a * n + e) * db + b; only e = 0 is populated.
  ComplexMatrix out = ComplexMatrix::Zero(da * n * db, da * n * db);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index a2 = 0; a2 < da; ++a2)
      out.block(a * n * db, a2 * n * db, db, db) = rho_ab.matrix().block(a * db, a2 * db, db, db);
  return DensityMatrix(std::move(out), Dims{da * n, db});
}

Povm induced_povm(const ProjectiveMeasurement& on_ae, Eigen::Index ancilla_dim) {
  const Eigen::Index n = ancilla_dim;
  if (on_ae.dim() % n != 0) throw PreconditionError("induced_povm: dimension not divisible by ancilla dim");
  const Eigen::Index da = on_ae.dim() / n;
  const ComplexMatrix embed = kron(identity(da), ComplexVector::Unit(n, 0));
  std::vector<ComplexMatrix> effects;
  for (const auto& pi : on_ae.projectors()) {
    ComplexMatrix m = embed.adjoint() * pi * embed;
    effects.emplace_back((m + m.adjoint()) / 2.0);
  }
  return Povm(std::move(effects));
}

}  // namespace qdiscord
