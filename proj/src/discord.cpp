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

#include "qdiscord/discord.hpp"

#include "qdiscord/conditions.hpp"
#include "qdiscord/entropy.hpp"
#include "qdiscord/nelder_mead.hpp"
#include "qdiscord/parametrization.hpp"
#include "qdiscord/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

namespace qdiscord {

void OptimizerConfig::validate() const {
  if (starts < 1) throw PreconditionError("OptimizerConfig: starts must be at least 1");
  if (max_iterations < 1) throw PreconditionError("OptimizerConfig: max_iterations must be at least 1");
  if (!(function_tolerance > 0.0)) throw PreconditionError("OptimizerConfig: tolerance must be positive");
}

double binary_entropy(double p) { return entropy_terms(std::vector<double>{p, 1.0 - p}); }

namespace {

constexpr double kInitialStep = 0.3;
constexpr double kPolishStep = 0.02;
constexpr std::size_t kPolished = 4;
constexpr int kPolishRounds = 4;

/// η S(X/η) for an unnormalized conditional state X with trace η.
double weighted_entropy(const ComplexMatrix& x) {
  const double eta = x.trace().real();
  if (eta <= kOutcomeCutoff) return 0.0;
  const Eigen::Index n = x.rows();
  if (n == 1) return 0.0;
  double terms = 0.0;
  if (n == 2) {
    const double a = x(0, 0).real(), d = x(1, 1).real();
    const double disc = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(x(0, 1)));
    const double l0 = 0.5 * (a + d + disc), l1 = 0.5 * (a + d - disc);
    terms = entropy_terms(std::vector<double>{l0, l1});
  } else {
    const auto eig = herm_eig(ComplexMatrix((x + x.adjoint()) / 2.0));
    terms = entropy_terms(std::span<const double>(eig.eigenvalues.data(), static_cast<std::size_t>(n)));
  }
  return terms + eta * std::log2(eta);
}

/// Σ_w η_w S(ρ_{B|w}) for rank-one effects |w⟩⟨w| given as columns of `effect_vectors`.
class RankOneObjective {
 public:
  explicit RankOneObjective(const DensityMatrix& rho)
      : rho_(rho.matrix()), da_(rho.dim_a()), db_(rho.dim_rest()) {}

  double operator()(const ComplexMatrix& effect_vectors) const {
    double total = 0.0;
    ComplexMatrix lifted = ComplexMatrix::Zero(da_ * db_, db_);
    for (Eigen::Index w = 0; w < effect_vectors.cols(); ++w) {
      for (Eigen::Index a = 0; a < da_; ++a)
        for (Eigen::Index b = 0; b < db_; ++b) lifted(a * db_ + b, b) = effect_vectors(a, w);
      total += weighted_entropy(lifted.adjoint() * rho_ * lifted);
    }
    return total;
  }

 private:
  const ComplexMatrix& rho_;
  Eigen::Index da_, db_;
};

struct Restart {
  std::vector<double> x;
  double value = 0.0;
  std::size_t base_index = 0;
};

struct MultiStartOutcome {
  Restart best;
  std::vector<double> values;
  int agreeing = 0;
  bool converged = false;
};

/// Runs one Nelder–Mead search per start; `bases` supplies the frame each start
/// is expanded around. The best kPolished restarts then get further local
/// rounds from their end points. Ties go to the lowest start index.
template <typename Evaluate>
MultiStartOutcome multistart(const std::vector<std::vector<double>>& starts,
                             const std::vector<std::size_t>& bases, const OptimizerConfig& cfg, Evaluate&& evaluate) {
  NelderMeadOptions opts;
  opts.max_iterations = cfg.max_iterations;
  opts.function_tolerance = cfg.function_tolerance;
  opts.initial_step = kInitialStep;
  std::vector<Restart> runs;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const std::size_t base = bases[s];
    auto f = [&](std::span<const double> x) { return evaluate(base, x); };
    auto r = nelder_mead(f, starts[s], opts);
    runs.push_back(Restart{std::move(r.x), r.value, base});
  }

  std::vector<std::size_t> order(runs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return runs[a].value < runs[b].value; });
  NelderMeadOptions polish = opts;
  polish.initial_step = kPolishStep;
  for (std::size_t k = 0; k < std::min(order.size(), kPolished); ++k) {
    Restart& run = runs[order[k]];
    auto f = [&](std::span<const double> x) { return evaluate(run.base_index, x); };
    for (int round = 0; round < kPolishRounds; ++round) {
      auto r = nelder_mead(f, run.x, polish);
      const double gain = run.value - r.value;
      if (r.value < run.value) {
        run.value = r.value;
        run.x = std::move(r.x);
      }
      if (gain <= cfg.function_tolerance) break;
    }
  }

  MultiStartOutcome out;
  std::size_t best = 0;
  for (std::size_t s = 0; s < runs.size(); ++s) {
    out.values.push_back(runs[s].value);
    if (runs[s].value < runs[best].value) best = s;
  }
  out.best = runs[best];
  std::vector<double> sorted = out.values;
  std::sort(sorted.begin(), sorted.end());
  for (double v : sorted) {
    if (v - sorted.front() <= kRestartAgreement) ++out.agreeing;
  }
  out.converged = sorted.size() < 2 || sorted[1] - sorted[0] <= kRestartAgreement;
  return out;
}

std::vector<double> random_angles(Rng& rng, std::size_t n) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return x;
}

MinimizationResult minimize_projective(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                       const std::vector<ComplexMatrix>& warm_bases) {
  cfg.validate();
  const Eigen::Index da = rho.dim_a();
  std::vector<ProjectiveParametrization> params{ProjectiveParametrization(da)};
  for (const auto& b : warm_bases) params.emplace_back(da, b);
  const std::size_t n = params.front().size();

  Rng rng(cfg.seed);
  std::vector<std::vector<double>> starts;
  std::vector<std::size_t> bases;
  for (std::size_t w = 0; w < warm_bases.size(); ++w) {
    starts.emplace_back(n, 0.0);
    bases.push_back(w + 1);
  }
  while (starts.size() < static_cast<std::size_t>(cfg.starts) || starts.empty()) {
    starts.push_back(random_angles(rng, n));
    bases.push_back(0);
  }

  const RankOneObjective objective(rho);
  auto out = multistart(starts, bases, cfg, [&](std::size_t base, std::span<const double> x) {
    return objective(params[base].basis(x));
  });

  ComplexMatrix frame = params[out.best.base_index].basis(out.best.x);
  ProjectiveMeasurement pm = ProjectiveMeasurement::from_basis(frame);
  const double value = conditional_entropy(rho, pm);
  return MinimizationResult{value,           std::move(pm),   std::move(frame),   std::move(out.best.x),
                            std::move(out.values), out.agreeing, out.converged};
}

Eigen::Index povm_outcomes(Eigen::Index da) { return da * da; }

Povm povm_from_isometry(const ComplexMatrix& v) {
  std::vector<ComplexMatrix> effects;
  for (Eigen::Index z = 0; z < v.rows(); ++z) {
    const ComplexVector w = v.row(z).adjoint();
    effects.emplace_back(w * w.adjoint());
  }
  return Povm(std::move(effects));
}

DiscordResult to_discord(const DensityMatrix& rho, MinimizationResult m) {
  const double value = von_neumann(rho.reduced_a()) - von_neumann(rho) + m.value;
  return DiscordResult{value,
                       std::move(m.measurement),
                       m.value,
                       m.restarts_agreeing,
                       m.converged,
                       std::move(m.parameters),
                       std::move(m.restart_values)};
}

}  // namespace

MinimizationResult min_conditional_entropy_projective(const DensityMatrix& rho_ab, const OptimizerConfig& cfg) {
  return minimize_projective(rho_ab, cfg, {});
}

MinimizationResult min_conditional_entropy_povm(const DensityMatrix& rho_ab, const OptimizerConfig& cfg) {
  cfg.validate();
  const Eigen::Index da = rho_ab.dim_a();
  const Eigen::Index k = povm_outcomes(da);
  const MinimizationResult proj = min_conditional_entropy_projective(rho_ab, cfg);

  // Base 0: warm start at the projective optimum, V = [U†; 0]; base 1: identity.
  const std::vector<PovmParametrization> params{PovmParametrization(da, k, proj.frame.adjoint()),
                                                PovmParametrization(da, k)};
  const std::size_t n = params.front().size();
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::vector<double>> starts{std::vector<double>(n, 0.0)};
  std::vector<std::size_t> bases{0};
  while (starts.size() < static_cast<std::size_t>(cfg.starts)) {
    starts.push_back(random_angles(rng, n));
    bases.push_back(1);
  }

  const RankOneObjective objective(rho_ab);
  auto out = multistart(starts, bases, cfg, [&](std::size_t base, std::span<const double> x) {
    return objective(ComplexMatrix(params[base].isometry(x).adjoint()));
  });

  ComplexMatrix frame = params[out.best.base_index].isometry(out.best.x);
  Povm povm = povm_from_isometry(frame);
  const double value = conditional_entropy(rho_ab, povm);
  return MinimizationResult{value,           std::move(povm), std::move(frame),   std::move(out.best.x),
                            std::move(out.values), out.agreeing, out.converged};
}

MinimizationResult min_conditional_entropy_neumark(const DensityMatrix& rho_ab, const OptimizerConfig& cfg) {
  cfg.validate();
  const Eigen::Index da = rho_ab.dim_a();
  const Eigen::Index n = povm_outcomes(da);
  const MinimizationResult proj = min_conditional_entropy_projective(rho_ab, cfg);
  const DensityMatrix extended = extend_with_ancilla(rho_ab, n);
  // Warm start: the projective optimum on A, extended by the ancilla's canonical basis.
  const ComplexMatrix lifted = kron(proj.frame, ComplexMatrix::Identity(n, n));
  OptimizerConfig ext_cfg = cfg;
  ext_cfg.seed = cfg.seed ^ 0xd1b54a32d192ed03ULL;
  MinimizationResult on_ae = minimize_projective(extended, ext_cfg, {lifted});

  Povm povm = induced_povm(std::get<ProjectiveMeasurement>(on_ae.measurement), n);
  on_ae.value = conditional_entropy(rho_ab, povm);
  on_ae.measurement = std::move(povm);
  return on_ae;
}

DiscordResult discord_projective(const DensityMatrix& rho_ab, const OptimizerConfig& cfg) {
  return to_discord(rho_ab, min_conditional_entropy_projective(rho_ab, cfg));
}

DiscordResult discord_povm(const DensityMatrix& rho_ab, const OptimizerConfig& cfg, PovmRoute route) {
  return to_discord(rho_ab, route == PovmRoute::direct ? min_conditional_entropy_povm(rho_ab, cfg)
                                                       : min_conditional_entropy_neumark(rho_ab, cfg));
}

double classical_correlations(const DensityMatrix& rho_ab, const OptimizerConfig& cfg, MeasurementClass variant) {
  const double min_ce = variant == MeasurementClass::projective ? min_conditional_entropy_projective(rho_ab, cfg).value
                                                                : min_conditional_entropy_povm(rho_ab, cfg).value;
  return von_neumann(rho_ab.reduced_b()) - min_ce;
}

double entanglement_entropy(const PureState& psi) {
  if (psi.dims().size() < 2) throw PreconditionError("entanglement_entropy: state is not bipartite");
  return von_neumann(psi.projector().reduced_a());
}

double eof_flagged(const SpectralDecomposition& d) {
  const ConditionReport report = check_condition_pure(d);
  if (!report.holds) {
    throw PreconditionError("eof_flagged: members do not occupy orthogonal A-subspaces (violation " +
                            std::to_string(report.max_violation) + ")");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < d.weights.size(); ++i) total += d.weights[i] * entanglement_entropy(d.vectors[i]);
  return total;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) throw PreconditionError("concurrence: expects a two-qubit state with dims (2, 2)");
  ComplexMatrix sy(2, 2);
  sy << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
  const ComplexMatrix yy = kron(sy, sy);
  // λ_i are the singular values of τ = Wᵀ (σ_y⊗σ_y) W, W = [√p_i u_i] over the
  // numerical support; no square roots of round-off eigenvalues on pure input.
  const SpectralDecomposition d = spectral_decomposition(rho);
  const auto r = static_cast<Eigen::Index>(d.weights.size());
  ComplexMatrix w(4, r);
  for (Eigen::Index i = 0; i < r; ++i) w.col(i) = std::sqrt(d.weights[i]) * d.vectors[i].amplitudes();
  const ComplexMatrix tau = w.transpose() * yy * w;
  const auto eig = herm_eig(ComplexMatrix(tau.adjoint() * tau));
  std::vector<double> lambda(4, 0.0);
  for (Eigen::Index i = 0; i < r; ++i) lambda[i] = std::sqrt(std::max(eig.eigenvalues(r - 1 - i), 0.0));
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double eof_two_qubit_oracle(const DensityMatrix& rho) {
  const double c = std::min(concurrence(rho), 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

}  // namespace qdiscord
