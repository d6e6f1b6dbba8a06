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

#include "qdiscord/stategen.hpp"

#include "qdiscord/conditions.hpp"
#include "qdiscord/random.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qdiscord {

namespace {

constexpr int kMaxRejections = 10000;

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::random_density, "random_density"},
    {Family::random_pure, "random_pure"},
    {Family::condition_pure_family, "condition_pure_family"},
    {Family::orthogonal_mixed_family, "orthogonal_mixed_family"},
    {Family::classical_quantum, "classical_quantum"},
    {Family::product, "product"},
};

void require_bipartite(const GenSpec& spec) {
  if (spec.dims.size() != 2) throw PreconditionError("gen: expected two subsystem dimensions");
  dims_product(spec.dims);
}

std::vector<double> random_weights(Rng& rng, std::size_t n, bool separated) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::vector<double> w(n);
    for (double& x : w) x = rng.uniform(0.05, 1.0);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= total;
    if (!separated) return w;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = std::abs(w[i] - w[j]) >= kWeightGap;
    if (ok) return w;
  }
  throw PreconditionError("gen: could not draw separated weights for " + std::to_string(n) + " members");
}

std::vector<double> member_weights(const GenSpec& spec, Rng& rng, std::size_t n, bool separated) {
  if (spec.weights.empty()) return random_weights(rng, n, separated);
  if (spec.weights.size() != n) throw PreconditionError("gen: expected " + std::to_string(n) + " weights");
  double total = 0.0;
  for (double w : spec.weights) {
    if (!(w > 0.0)) throw PreconditionError("gen: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) throw PreconditionError("gen: weights do not sum to 1");
  return spec.weights;
}

std::vector<Eigen::Index> blocks_for(const GenSpec& spec) {
  const Eigen::Index da = spec.dims[0];
  std::vector<Eigen::Index> blocks = spec.block_dims;
  if (blocks.empty()) {
    if (da < 2) throw PreconditionError("gen: block families need dA >= 2");
    blocks = {da / 2, da - da / 2};
  }
  Eigen::Index used = 0;
  for (auto b : blocks) {
    if (b < 1) throw PreconditionError("gen: block dimensions must be positive");
    used += b;
  }
  if (used > da) {
    throw PreconditionError("gen: blocks need " + std::to_string(used) + " A-dimensions but dA = " +
                            std::to_string(da));
  }
  return blocks;
}

ComplexMatrix ginibre_state(Rng& rng, Eigen::Index d, Eigen::Index rank) {
  const Eigen::Index r = (rank <= 0 || rank > d) ? d : rank;
  const ComplexMatrix g = rng.ginibre(d, r);
  ComplexMatrix m = g * g.adjoint();
  return m / m.trace().real();
}

ComplexVector gaussian_unit(Rng& rng, Eigen::Index d) {
  ComplexVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = rng.complex_gaussian();
  return v.normalized();
}

/// Embeds an operator on C^block ⊗ H_B at A-offset `offset` of C^dA ⊗ H_B.
ComplexMatrix embed_block(const ComplexMatrix& m, Eigen::Index offset, Eigen::Index block, Eigen::Index da,
                          Eigen::Index db) {
  ComplexMatrix out = ComplexMatrix::Zero(da * db, da * db);
  out.block(offset * db, offset * db, block * db, block * db) = m;
  return out;
}

Generated condition_pure(const GenSpec& spec, Rng& rng) {
  require_bipartite(spec);
  const Eigen::Index da = spec.dims[0], db = spec.dims[1];
  const auto blocks = blocks_for(spec);
  const auto weights = member_weights(spec, rng, blocks.size(), true);
  if (!spec.schmidt_weights.empty() && spec.schmidt_weights.size() != blocks.size()) {
    throw PreconditionError("gen: schmidt_weights must have one entry per block");
  }
  SpectralDecomposition d;
  ComplexMatrix rho = ComplexMatrix::Zero(da * db, da * db);
  Eigen::Index offset = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    ComplexVector u = ComplexVector::Zero(da * db);
    if (!spec.schmidt_weights.empty()) {
      const double q = spec.schmidt_weights[i];
      if (blocks[i] < 2 || db < 2 || q < 0.0 || q > 1.0) {
        throw PreconditionError("gen: schmidt_weights need blocks of size >= 2, dB >= 2 and q in [0, 1]");
      }
      u(offset * db) = std::sqrt(q);
      u((offset + 1) * db + 1) = std::sqrt(1.0 - q);
    } else {
      u.segment(offset * db, blocks[i] * db) = gaussian_unit(rng, blocks[i] * db);
    }
    rho += weights[i] * u * u.adjoint();
    d.weights.push_back(weights[i]);
    d.vectors.emplace_back(std::move(u), spec.dims);
    offset += blocks[i];
  }
  DensityMatrix state(rho, spec.dims);
  return Generated{std::move(state), std::move(d), std::nullopt};
}

Generated orthogonal_mixed(const GenSpec& spec, Rng& rng) {
  require_bipartite(spec);
  const Eigen::Index da = spec.dims[0], db = spec.dims[1];
  const auto blocks = blocks_for(spec);
  const auto weights = member_weights(spec, rng, blocks.size(), true);
  Ensemble e;
  Eigen::Index offset = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const ComplexMatrix member = ginibre_state(rng, blocks[i] * db, spec.rank);
    e.weights.push_back(weights[i]);
    e.states.emplace_back(embed_block(member, offset, blocks[i], da, db), spec.dims);
    offset += blocks[i];
  }
  DensityMatrix mix = e.mixture();
  return Generated{std::move(mix), std::nullopt, std::move(e)};
}

}  // namespace

std::string to_string(Family f) {
  for (const auto& fn : kFamilyNames)
    if (fn.family == f) return fn.name;
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (const auto& fn : kFamilyNames)
    if (name == fn.name) return fn.family;
  throw PreconditionError("unknown state family '" + name + "'");
}

Generated gen(const GenSpec& spec) {
  Rng rng(spec.seed);
  const Eigen::Index n = dims_product(spec.dims);
  switch (spec.family) {
    case Family::random_density:
      return Generated{DensityMatrix(ginibre_state(rng, n, spec.rank), spec.dims), std::nullopt, std::nullopt};
    case Family::random_pure: {
      PureState psi(gaussian_unit(rng, n), spec.dims);
      SpectralDecomposition d{{1.0}, {psi}};
      return Generated{psi.projector(), std::move(d), std::nullopt};
    }
    case Family::condition_pure_family:
      return condition_pure(spec, rng);
    case Family::orthogonal_mixed_family:
      return orthogonal_mixed(spec, rng);
    case Family::classical_quantum: {
      require_bipartite(spec);
      const Eigen::Index da = spec.dims[0], db = spec.dims[1];
      const auto weights = member_weights(spec, rng, static_cast<std::size_t>(da), false);
      ComplexMatrix rho = ComplexMatrix::Zero(n, n);
      for (Eigen::Index x = 0; x < da; ++x) {
        rho.block(x * db, x * db, db, db) = weights[static_cast<std::size_t>(x)] * ginibre_state(rng, db, spec.rank);
      }
      return Generated{DensityMatrix::from_unnormalized(rho, spec.dims), std::nullopt, std::nullopt};
    }
    case Family::product: {
      require_bipartite(spec);
      const ComplexMatrix ra = ginibre_state(rng, spec.dims[0], 0);
      const ComplexMatrix rb = ginibre_state(rng, spec.dims[1], 0);
      return Generated{DensityMatrix::from_unnormalized(kron(ra, rb), spec.dims), std::nullopt, std::nullopt};
    }
  }
  throw PreconditionError("gen: unhandled family");
}

Generated gen_violating(const GenSpec& spec) {
  require_bipartite(spec);
  const Eigen::Index da = spec.dims[0], db = spec.dims[1];
  if (db < 2) throw PreconditionError("gen_violating: dB = 1 admits no cross terms under Tr_A");
  Rng rng(spec.seed);
  const auto weights = member_weights(spec, rng, 2, true);
  if (std::abs(weights[0] - weights[1]) < kWeightGap) {
    throw PreconditionError("gen_violating: weights must differ by at least 0.05");
  }

  ComplexVector u1, u2;
  if (spec.bell_pair) {
    if (da != 2 || db != 2) throw PreconditionError("gen_violating: the Bell pair needs dims (2, 2)");
    const double h = 1.0 / std::sqrt(2.0);
    u1 = ComplexVector::Zero(4);
    u2 = ComplexVector::Zero(4);
    u1(0) = h;  // |00⟩
    u1(3) = h;  // |11⟩
    u2(1) = h;  // |01⟩
    u2(2) = h;  // |10⟩
  } else {
    bool found = false;
    for (int attempt = 0; attempt < kMaxRejections && !found; ++attempt) {
      u1 = gaussian_unit(rng, da * db);
      u2 = gaussian_unit(rng, da * db);
      u2 -= u1 * u1.dot(u2);
      if (u2.norm() < 1e-6) continue;
      u2.normalize();
      const PureState p1(u1, spec.dims), p2(u2, spec.dims);
      found = cross_trace_over_a(p1, p2).norm() >= 1e-2;
    }
    if (!found) throw PreconditionError("gen_violating: rejection sampling failed");
  }
  SpectralDecomposition d{weights, {PureState(u1, spec.dims), PureState(u2, spec.dims)}};
  DensityMatrix state(d.reconstruct(), spec.dims);
  return Generated{std::move(state), std::move(d), std::nullopt};
}

Povm trine_povm() {
  std::vector<ComplexMatrix> effects;
  for (int k = 0; k < 3; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 3.0;
    ComplexVector v(2);
    v << std::cos(t / 2.0), std::sin(t / 2.0);
    effects.push_back((2.0 / 3.0) * v * v.adjoint());
  }
  return Povm(std::move(effects));
}

Povm random_povm(Eigen::Index dim, std::size_t outcomes, std::uint64_t seed) {
  if (dim < 1 || outcomes < 1) throw PreconditionError("random_povm: need dim >= 1 and outcomes >= 1");
  Rng rng(seed);
  std::vector<ComplexMatrix> raw;
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (std::size_t x = 0; x < outcomes; ++x) {
    const ComplexMatrix g = rng.ginibre(dim, dim);
    raw.push_back(g * g.adjoint());
    total += raw.back();
  }
  // M_x = S^{-1/2} G_x G_x† S^{-1/2} with S = Σ G_x G_x†, positive definite almost surely.
  const HermitianEigen<double> es = herm_eig(total);
  const ComplexMatrix inv_sqrt = es.eigenvectors *
                                 es.eigenvalues.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                                 es.eigenvectors.adjoint();
  std::vector<ComplexMatrix> effects;
  for (const auto& r : raw) {
    ComplexMatrix m = inv_sqrt * r * inv_sqrt;
    effects.push_back(0.5 * (m + m.adjoint()));
  }
  return Povm(std::move(effects));
}

}  // namespace qdiscord
