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

#include "qdiscord/theorems.hpp"

#include "qdiscord/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qdiscord {

namespace {

void settle(TheoremVerdict& v) {
  v.passed = v.max_discrepancy <= v.tolerance_used;
  v.outcome = v.passed ? Outcome::passed : Outcome::failed;
}

void mark_inconclusive(TheoremVerdict& v, std::string note) {
  v.max_discrepancy = std::numeric_limits<double>::quiet_NaN();
  v.passed = false;
  v.outcome = Outcome::inconclusive;
  v.note = std::move(note);
}

SpectralDecomposition decomposition_for(const DensityMatrix& rho,
                                        const std::optional<SpectralDecomposition>& supplied) {
  if (!supplied) return spectral_decomposition(rho);
  supplied->validate();
  if ((supplied->reconstruct() - rho.matrix()).norm() > 1e-9) {
    throw PreconditionError("supplied decomposition does not reconstruct the state");
  }
  return *supplied;
}

bool has_degenerate_weights(const SpectralDecomposition& d) {
  for (std::size_t i = 0; i < d.weights.size(); ++i)
    for (std::size_t j = i + 1; j < d.weights.size(); ++j)
      if (std::abs(d.weights[i] - d.weights[j]) <= kDegeneracyTolerance) return true;
  return false;
}

double max_pairwise_gap(const std::vector<double>& xs) {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return *hi - *lo;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::passed:
      return "passed";
    case Outcome::failed:
      return "failed";
    case Outcome::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

double TheoremVerdict::quantity(const std::string& name) const {
  for (const auto& [k, v] : quantities)
    if (k == name) return v;
  throw std::out_of_range("TheoremVerdict: no quantity '" + name + "'");
}

TheoremVerdict verify_thm1(const DensityMatrix& rho_ab, const OptimizerConfig& cfg,
                           const std::optional<SpectralDecomposition>& decomposition) {
  const SpectralDecomposition d = decomposition_for(rho_ab, decomposition);
  const ConditionReport cond = check_condition_pure(d);
  TheoremVerdict v;
  v.theorem_id = "thm1";
  v.quantities.emplace_back("max_violation", cond.max_violation);
  v.quantities.emplace_back("condition_holds", cond.holds ? 1.0 : 0.0);
  if (!cond.holds && cond.max_violation < kFalsificationThreshold) {
    mark_inconclusive(v, "cross-term violation between condition tolerance and falsification threshold");
    return v;
  }
  if (!cond.holds && has_degenerate_weights(d)) {
    // Another eigenbasis of the degenerate eigenspace may satisfy the condition.
    mark_inconclusive(v, "condition violated for a degenerate spectrum; eigenbasis not unique");
    return v;
  }
  const MinimizationResult m = min_conditional_entropy_projective(rho_ab, cfg);
  v.quantities.emplace_back("min_conditional_entropy", m.value);
  v.quantities.emplace_back("entropy_ab", von_neumann(rho_ab));
  if (cond.holds) {
    v.max_discrepancy = std::max(m.value, 0.0);
    v.tolerance_used = kZeroMinimumTolerance;
    v.note = "condition holds: minimum must vanish";
  } else {
    v.max_discrepancy = std::max(0.0, kPositiveMinimumFloor - m.value);
    v.tolerance_used = 0.0;
    v.note = "condition violated: minimum must be positive";
  }
  settle(v);
  return v;
}

TheoremVerdict verify_thm2(const DensityMatrix& rho_ab, const OptimizerConfig& cfg,
                           const std::optional<SpectralDecomposition>& decomposition) {
  const SpectralDecomposition d = decomposition_for(rho_ab, decomposition);
  const ConditionReport cond = check_condition_pure(d);
  if (!cond.holds) {
    throw PreconditionError("verify_thm2: cross-term condition fails (violation " +
                            std::to_string(cond.max_violation) + ")");
  }
  const DiscordResult povm = discord_povm(rho_ab, cfg);
  const DiscordResult proj = discord_projective(rho_ab, cfg);
  const double eof = eof_flagged(d);
  double weighted_entropies = 0.0;
  double weighted_discords = 0.0;
  bool members_converged = true;
  for (std::size_t i = 0; i < d.weights.size(); ++i) {
    const DensityMatrix member = d.vectors[i].projector();
    weighted_entropies += d.weights[i] * von_neumann(member.reduced_b());
    const DiscordResult md = discord_projective(member, cfg);
    weighted_discords += d.weights[i] * md.value;
    members_converged = members_converged && md.converged;
  }

  TheoremVerdict v;
  v.theorem_id = "thm2";
  v.quantities = {{"discord_povm", povm.value},
                  {"discord_projective", proj.value},
                  {"eof_flagged", eof},
                  {"weighted_member_entropy", weighted_entropies},
                  {"weighted_member_discord", weighted_discords}};
  if (!povm.converged || !proj.converged || !members_converged) {
    mark_inconclusive(v, "optimizer restarts did not agree");
    return v;
  }
  v.max_discrepancy = max_pairwise_gap({povm.value, proj.value, eof, weighted_entropies, weighted_discords});
  v.tolerance_used = kOptimizedAgreement;
  settle(v);
  return v;
}

TheoremVerdict verify_thm3(const Ensemble& e, const OptimizerConfig& cfg) {
  const ConditionReport cond = check_condition_mixed(e);
  if (!cond.holds) {
    throw PreconditionError("verify_thm3: Tr_A(rho_i rho_j) != 0 (violation " + std::to_string(cond.max_violation) +
                            ")");
  }
  const DiscordResult mix = discord_povm(e.mixture(), cfg);
  double weighted = 0.0;
  for (std::size_t i = 0; i < e.weights.size(); ++i) weighted += e.weights[i] * discord_povm(e.states[i], cfg).value;
  TheoremVerdict v;
  v.theorem_id = "thm3";
  v.quantities = {{"discord_mixture", mix.value}, {"weighted_member_discord", weighted}};
  v.max_discrepancy = std::abs(mix.value - weighted);
  v.tolerance_used = kOptimizedAgreement;
  settle(v);
  return v;
}

TheoremVerdict check_saturation(const DensityMatrix& rho_ab, const OptimizerConfig& cfg,
                                const std::optional<SpectralDecomposition>& decomposition) {
  const SpectralDecomposition d = decomposition_for(rho_ab, decomposition);
  const MinimizationResult m = min_conditional_entropy_projective(rho_ab, cfg);
  const double s_ab = von_neumann(rho_ab);
  const bool saturated = std::abs(m.value - s_ab) <= kSaturationTolerance;

  double cross_b = 0.0;
  for (std::size_t i = 0; i < d.weights.size(); ++i)
    for (std::size_t j = 0; j < d.weights.size(); ++j) {
      if (i == j || d.weights[i] * d.weights[j] <= kRankCutoff) continue;
      cross_b = std::max(cross_b, cross_trace_over_b(d.vectors[i], d.vectors[j]).norm());
    }

  TheoremVerdict v;
  v.theorem_id = "saturation";
  v.quantities = {{"min_conditional_entropy", m.value},
                  {"entropy_ab", s_ab},
                  {"saturated", saturated ? 1.0 : 0.0},
                  {"max_cross_trace_b", cross_b}};
  v.tolerance_used = kSaturationCrossTolerance;
  v.max_discrepancy = saturated ? cross_b : 0.0;
  v.note = saturated ? "saturated: necessary cross-term condition checked" : "not saturated";
  settle(v);
  return v;
}

TheoremVerdict verify_tripartite(const DensityMatrix& rho_ab, const OptimizerConfig& cfg,
                                 const std::optional<SpectralDecomposition>& decomposition) {
  const SpectralDecomposition d = decomposition_for(rho_ab, decomposition);
  const ConditionReport cond = check_condition_pure(d);
  if (!cond.holds) {
    throw PreconditionError("verify_tripartite: cross-term condition fails (violation " +
                            std::to_string(cond.max_violation) + ")");
  }
  const Eigen::Index da = rho_ab.dims()[0];
  const Eigen::Index db = rho_ab.dim_rest();
  const PureState psi = purify(d);
  const auto dc = psi.dims().back();

  // Tr_C of the purification must give back ρ_AB.
  const ComplexMatrix full = psi.amplitudes() * psi.amplitudes().adjoint();
  const double purification_residual = (partial_trace(full, da * db, dc, Subsystem::B) - rho_ab.matrix()).norm();

  // Schmidt form across AB|C: √p_i |u_i⟩ ⊗ |i⟩_C by construction; schmidt()
  // must agree on the coefficients.
  const SchmidtDecomposition sd = schmidt(psi, psi.dims().size() - 1);
  std::vector<double> expected = d.weights;
  std::sort(expected.rbegin(), expected.rend());
  double schmidt_gap = sd.coefficients.size() == expected.size() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < std::min(expected.size(), sd.coefficients.size()); ++i) {
    schmidt_gap = std::max(schmidt_gap, std::abs(sd.coefficients[i] * sd.coefficients[i] - expected[i]));
  }

  const DensityMatrix rho_bc = DensityMatrix(full, Dims{da, db, dc}).reduced_b();
  ComplexMatrix flagged = ComplexMatrix::Zero(db * dc, db * dc);
  for (std::size_t i = 0; i < d.weights.size(); ++i) {
    const ComplexMatrix sigma_b = cross_trace_over_a(d.vectors[i], d.vectors[i]);
    const ComplexVector flag = ComplexVector::Unit(dc, static_cast<Eigen::Index>(i));
    flagged += d.weights[i] * kron(sigma_b, ComplexMatrix(flag * flag.adjoint()));
  }
  const double flagged_residual = (rho_bc.matrix() - flagged).norm();

  const DensityMatrix rho_cb = swap_subsystems(rho_bc);
  const DiscordResult dc_result = discord_projective(rho_cb, cfg);

  TheoremVerdict v;
  v.theorem_id = "tripartite";
  v.quantities = {{"purification_residual", purification_residual},
                  {"schmidt_coefficient_gap", schmidt_gap},
                  {"flagged_residual", flagged_residual},
                  {"discord_on_c", dc_result.value}};
  // Each check is scaled to its own tolerance; the verdict tolerance is 1.
  v.max_discrepancy = std::max({purification_residual / 1e-9, schmidt_gap / 1e-9,
                                flagged_residual / kFlaggedReconstructionTolerance,
                                std::max(dc_result.value, 0.0) / kOptimizedAgreement});
  v.tolerance_used = 1.0;
  v.note = "max_discrepancy is the largest ratio of a residual to its tolerance";
  settle(v);
  return v;
}

}  // namespace qdiscord
