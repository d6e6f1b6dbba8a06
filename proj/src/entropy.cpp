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

#include "qdiscord/entropy.hpp"

#include <cmath>

namespace qdiscord {

ProbDist::ProbDist(std::vector<double> values) : values_(std::move(values)) {
  double total = 0.0;
  for (double v : values_) {
    if (!(v >= 0.0)) throw PreconditionError("ProbDist: negative or non-finite probability");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-10) throw PreconditionError("ProbDist: probabilities do not sum to 1");
}

double entropy_terms(std::span<const double> values) {
  double h = 0.0;
  for (double p : values) {
    if (p > kProbabilityFloor) h -= p * std::log2(p);
  }
  return h;
}

double shannon(const ProbDist& p) { return entropy_terms(p.values()); }

double von_neumann(const DensityMatrix& rho) {
  const auto eig = herm_eig(rho.matrix());
  return entropy_terms(std::span<const double>(eig.eigenvalues.data(), static_cast<std::size_t>(eig.eigenvalues.size())));
}

double conditional_entropy(const DensityMatrix& rho_ab, const Povm& m) {
  const auto ens = apply_on_a(rho_ab, m);
  double s = 0.0;
  for (std::size_t x = 0; x < ens.states.size(); ++x) s += ens.probabilities[x] * von_neumann(ens.states[x]);
  return s;
}

double conditional_entropy(const DensityMatrix& rho_ab, const ProjectiveMeasurement& m) {
  return conditional_entropy(rho_ab, m.as_povm());
}

double mutual_information(const DensityMatrix& rho_ab) {
  return von_neumann(rho_ab.reduced_a()) + von_neumann(rho_ab.reduced_b()) - von_neumann(rho_ab);
}

double ensemble_entropy_gap(const Ensemble& e) {
  e.validate();
  double member_sum = 0.0;
  for (std::size_t i = 0; i < e.states.size(); ++i) member_sum += e.weights[i] * von_neumann(e.states[i]);
  return entropy_terms(e.weights) + member_sum - von_neumann(e.mixture());
}

}  // namespace qdiscord
