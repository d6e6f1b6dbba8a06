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

#include "qdiscord/parametrization.hpp"

#include <cmath>

namespace qdiscord {

GivensPairs all_pairs(Eigen::Index d) { return leading_pairs(d, d); }

GivensPairs leading_pairs(Eigen::Index d, Eigen::Index lead) {
  GivensPairs pairs;
  for (Eigen::Index p = 0; p < std::min(lead, d); ++p)
    for (Eigen::Index q = p + 1; q < d; ++q) pairs.emplace_back(p, q);
  return pairs;
}

void apply_givens_chain(const GivensPairs& pairs, std::span<const double> params, ComplexMatrix& m) {
  if (params.size() != 2 * pairs.size()) throw PreconditionError("apply_givens_chain: wrong parameter count");
  // Rightmost rotation acts first.
  for (std::size_t k = pairs.size(); k-- > 0;) {
    const auto [p, q] = pairs[k];
    const double c = std::cos(params[2 * k]);
    const double s = std::sin(params[2 * k]);
    const Complex e = std::polar(1.0, params[2 * k + 1]);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex mp = m(p, j), mq = m(q, j);
      m(p, j) = c * mp - e * s * mq;
      m(q, j) = std::conj(e) * s * mp + c * mq;
    }
  }
}

ComplexMatrix phase_layer(std::span<const double> phases) {
  const auto d = static_cast<Eigen::Index>(phases.size());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) out(i, i) = std::polar(1.0, phases[static_cast<std::size_t>(i)]);
  return out;
}

ComplexMatrix unitary_from_params(Eigen::Index d, std::span<const double> params) {
  const GivensPairs pairs = all_pairs(d);
  const std::size_t n_rot = 2 * pairs.size();
  if (params.size() != n_rot + static_cast<std::size_t>(d)) {
    throw PreconditionError("unitary_from_params: expected d^2 parameters");
  }
  ComplexMatrix u = phase_layer(params.subspan(n_rot));
  apply_givens_chain(pairs, params.first(n_rot), u);
  return u;
}

ProjectiveParametrization::ProjectiveParametrization(Eigen::Index d, ComplexMatrix base)
    : d_(d), pairs_(all_pairs(d)), base_(std::move(base)) {
  if (base_.rows() != d || base_.cols() != d) throw PreconditionError("ProjectiveParametrization: base shape");
}

ProjectiveParametrization::ProjectiveParametrization(Eigen::Index d)
    : ProjectiveParametrization(d, ComplexMatrix::Identity(d, d)) {}

ComplexMatrix ProjectiveParametrization::basis(std::span<const double> params) const {
  ComplexMatrix u = base_;
  apply_givens_chain(pairs_, params, u);
  return u;
}

PovmParametrization::PovmParametrization(Eigen::Index d, Eigen::Index outcomes, ComplexMatrix base)
    : d_(d), k_(outcomes), pairs_(leading_pairs(outcomes, d)), base_(std::move(base)) {
  if (outcomes < d) throw PreconditionError("PovmParametrization: fewer outcomes than dimension");
  if (base_.rows() != d || base_.cols() != d) throw PreconditionError("PovmParametrization: base shape");
}

PovmParametrization::PovmParametrization(Eigen::Index d, Eigen::Index outcomes)
    : PovmParametrization(d, outcomes, ComplexMatrix::Identity(d, d)) {}

ComplexMatrix PovmParametrization::isometry(std::span<const double> params) const {
  const std::size_t n_rot = 2 * pairs_.size();
  if (params.size() != size()) throw PreconditionError("PovmParametrization: wrong parameter count");
  ComplexMatrix v = ComplexMatrix::Zero(k_, d_);
  v.topRows(d_) = phase_layer(params.subspan(n_rot)) * base_;
  apply_givens_chain(pairs_, params.first(n_rot), v);
  return v;
}

}  // namespace qdiscord
