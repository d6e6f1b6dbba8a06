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

#include "qdiscord/conditions.hpp"

#include <algorithm>

namespace qdiscord {

namespace {

template <typename CrossTerm>
ConditionReport scan_pairs(const std::vector<double>& weights, CrossTerm&& cross) {
  ConditionReport r;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (i == j || weights[i] <= kRankCutoff || weights[j] <= kRankCutoff) continue;
      const double v = cross(i, j);
      r.max_violation = std::max(r.max_violation, v);
      if (v > kConditionTolerance && i < j) r.pair_indices.emplace_back(i, j);
    }
  }
  r.holds = r.max_violation <= kConditionTolerance;
  return r;
}

}  // namespace

ConditionReport check_condition_pure(const SpectralDecomposition& d) {
  d.validate();
  return scan_pairs(d.weights,
                    [&](std::size_t i, std::size_t j) { return cross_trace_over_a(d.vectors[i], d.vectors[j]).norm(); });
}

ConditionReport check_condition_mixed(const Ensemble& e) {
  e.validate();
  return scan_pairs(e.weights, [&](std::size_t i, std::size_t j) {
    const auto& s = e.states[i];
    const ComplexMatrix prod = s.matrix() * e.states[j].matrix();
    return partial_trace(prod, s.dim_a(), s.dim_rest(), Subsystem::A).norm();
  });
}

}  // namespace qdiscord
