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
#include "qdiscord/entropy.hpp"
#include "qdiscord/stategen.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace qdiscord {
namespace {

const OptimizerConfig kCfg{};

const double kFamilyDiscord = 0.5 * oracle::binary_entropy(0.8) + 0.5 * oracle::binary_entropy(0.5);

ComplexMatrix pauli(int i) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  const Complex I(0, 1);
  switch (i) {
    case 1:
      s(0, 1) = s(1, 0) = 1;
      break;
    case 2:
      s(0, 1) = -I;
      s(1, 0) = I;
      break;
    default:
      s(0, 0) = 1;
      s(1, 1) = -1;
  }
  return s;
}

/// ¼(I + Σ c_i σ_i⊗σ_i).
DensityMatrix bell_diagonal(double c1, double c2, double c3) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  const double c[3] = {c1, c2, c3};
  for (int i = 0; i < 3; ++i) m += c[i] * oracle::kron(pauli(i + 1), pauli(i + 1));
  return DensityMatrix(m / 4.0, Dims{2, 2});
}

/// Closed-form discord of a Bell-diagonal state: I from the four eigenvalues,
/// J from c = max|c_i|.
double bell_diagonal_discord(double c1, double c2, double c3) {
  const double lam[4] = {(1 - c1 - c2 - c3) / 4, (1 - c1 + c2 + c3) / 4, (1 + c1 - c2 + c3) / 4,
                         (1 + c1 + c2 - c3) / 4};
  double s_ab = 0.0;
  for (double l : lam)
    if (l > 1e-15) s_ab -= l * std::log2(l);
  const double mi = 2.0 - s_ab;
  const double c = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
  auto term = [](double x) { return x > 1e-15 ? x * std::log2(x) : 0.0; };
  const double j = 0.5 * term(1 - c) + 0.5 * term(1 + c);
  return mi - j;
}

DensityMatrix random_state(Rng& rng, Eigen::Index da, Eigen::Index db, Eigen::Index rank = 0) {
  return DensityMatrix(oracle::random_density_matrix(rng, da * db, rank), Dims{da, db});
}

TEST(OptimizerConfig, Validates) {
  OptimizerConfig c;
  c.starts = 0;
  EXPECT_THROW(c.validate(), PreconditionError);
  c = OptimizerConfig{};
  c.function_tolerance = -1.0;
  EXPECT_THROW(c.validate(), PreconditionError);
}

TEST(MinConditionalEntropy, ProductStateIsEntropyOfB) {
  Rng rng(1);
  const ComplexMatrix rb = oracle::random_density_matrix(rng, 2);
  const DensityMatrix rho(oracle::kron(oracle::random_density_matrix(rng, 2), rb), Dims{2, 2});
  EXPECT_NEAR(min_conditional_entropy_projective(rho, kCfg).value, oracle::entropy(rb), 1e-9);
}

TEST(MinConditionalEntropy, BellStateIsZero) {
  EXPECT_NEAR(min_conditional_entropy_projective(oracle::phi_plus().projector(), kCfg).value, 0.0, 1e-9);
}

TEST(MinConditionalEntropy, ClassicalStateIsZeroAndSweepAgrees) {
  const DensityMatrix cc = oracle::classical_classical();
  const double opt = min_conditional_entropy_projective(cc, kCfg).value;
  EXPECT_NEAR(opt, 0.0, 1e-9);
  // 1° sweep over qubit bases cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩.
  double sweep = 1e9;
  for (int t = 0; t <= 180; ++t)
    for (int p = 0; p < 360; p += 10) {
      const double th = t * std::numbers::pi / 180.0, ph = p * std::numbers::pi / 180.0;
      const ComplexVector v = oracle::ket({std::cos(th / 2), std::polar(std::sin(th / 2), ph)});
      const ComplexVector w = oracle::ket({-std::polar(std::sin(th / 2), -ph), std::cos(th / 2)});
      sweep = std::min(sweep, oracle::conditional_entropy(cc.matrix(), 2, 2, {oracle::projector(v), oracle::projector(w)}));
    }
  EXPECT_NEAR(sweep, 0.0, 1e-12);
  EXPECT_LE(opt, sweep + 1e-9);
}

TEST(Discord, BellState) {
  const DiscordResult p = discord_projective(oracle::phi_plus().projector(), kCfg);
  const DiscordResult q = discord_povm(oracle::phi_plus().projector(), kCfg);
  EXPECT_NEAR(p.value, 1.0, 1e-5);
  EXPECT_NEAR(q.value, 1.0, 1e-5);
  EXPECT_TRUE(p.converged);
  EXPECT_NEAR(classical_correlations(oracle::phi_plus().projector(), kCfg, MeasurementClass::projective), 1.0, 1e-5);
}

TEST(Discord, ProductStateIsZero) {
  Rng rng(2);
  const DensityMatrix rho(oracle::kron(oracle::random_density_matrix(rng, 3), oracle::random_density_matrix(rng, 2)),
                          Dims{3, 2});
  EXPECT_NEAR(discord_projective(rho, kCfg).value, 0.0, 1e-8);
  EXPECT_NEAR(discord_povm(rho, kCfg).value, 0.0, 1e-8);
  EXPECT_NEAR(classical_correlations(rho, kCfg, MeasurementClass::povm), 0.0, 1e-8);
}

TEST(Discord, ClassicalStateCorrelations) {
  EXPECT_NEAR(classical_correlations(oracle::classical_classical(), kCfg, MeasurementClass::projective), 1.0, 1e-8);
  EXPECT_NEAR(discord_projective(oracle::classical_classical(), kCfg).value, 0.0, 1e-5);
}

TEST(Discord, FourByTwoFamilyClosedForm) {
  const DensityMatrix rho(oracle::family_4x2(0.5, 0.8, 0.5), Dims{4, 2});
  EXPECT_NEAR(kFamilyDiscord, 0.860964, 1e-6);
  EXPECT_NEAR(discord_projective(rho, kCfg).value, kFamilyDiscord, 1e-5);
  EXPECT_NEAR(discord_povm(rho, kCfg).value, kFamilyDiscord, 1e-5);
}

TEST(Discord, BellDiagonalClosedForm) {
  const double cs[][3] = {{-0.6, -0.4, -0.2}, {0.3, -0.3, 0.1}, {-0.8, 0.5, 0.3}, {0.1, 0.1, -0.1}};
  for (const auto& c : cs) {
    const DensityMatrix rho = bell_diagonal(c[0], c[1], c[2]);
    const double expected = bell_diagonal_discord(c[0], c[1], c[2]);
    EXPECT_NEAR(discord_projective(rho, kCfg).value, expected, 1e-6) << c[0] << " " << c[1] << " " << c[2];
  }
}

TEST(Discord, PureStateIdentity) {
  Rng rng(3);
  for (int i = 0; i < 6; ++i) {
    const Eigen::Index db = 2 + i % 2;
    const PureState psi(oracle::random_unit_vector(rng, 2 * db), Dims{2, db});
    const double s_a = oracle::entropy(psi.projector().reduced_a().matrix());
    EXPECT_NEAR(entanglement_entropy(psi), s_a, 1e-10);
    EXPECT_NEAR(discord_projective(psi.projector(), kCfg).value, s_a, 1e-5);
    EXPECT_NEAR(discord_povm(psi.projector(), kCfg).value, s_a, 1e-5);
  }
}

TEST(Discord, OrderingChainAndEvaluationConsistency) {
  Rng rng(4);
  for (int i = 0; i < 6; ++i) {
    const DensityMatrix rho = random_state(rng, 2, 2);
    const MinimizationResult proj = min_conditional_entropy_projective(rho, kCfg);
    const MinimizationResult povm = min_conditional_entropy_povm(rho, kCfg);
    EXPECT_GE(povm.value, -1e-8);
    EXPECT_LE(povm.value, proj.value + 1e-6);
    EXPECT_LE(proj.value, von_neumann(rho) + 1e-6);
    EXPECT_NEAR(conditional_entropy(rho, std::get<ProjectiveMeasurement>(proj.measurement)), proj.value, 1e-12);
    EXPECT_NEAR(conditional_entropy(rho, std::get<Povm>(povm.measurement)), povm.value, 1e-12);
    EXPECT_EQ(std::get<Povm>(povm.measurement).size(), 4u);
  }
}

TEST(Discord, RandomMeasurementSweepFindsNothingLower) {
  Rng rng(5);
  const DensityMatrix rho = random_state(rng, 2, 2);
  const double opt = min_conditional_entropy_projective(rho, kCfg).value;
  double best = 1e9;
  for (int i = 0; i < 10000; ++i) {
    best = std::min(best, conditional_entropy(rho, ProjectiveMeasurement::from_basis(random_unitary(rng, 2))));
  }
  EXPECT_GE(best, opt - 1e-6);
}

TEST(Discord, LocalUnitaryInvariance) {
  Rng rng(6);
  for (int i = 0; i < 3; ++i) {
    const DensityMatrix rho = random_state(rng, 2, 3);
    const ComplexMatrix u = oracle::kron(random_unitary(rng, 2), random_unitary(rng, 3));
    const DensityMatrix rotated(u * rho.matrix() * u.adjoint(), Dims{2, 3});
    EXPECT_NEAR(discord_projective(rho, kCfg).value, discord_projective(rotated, kCfg).value, 1e-5);
  }
}

TEST(Discord, NeumarkRouteAgreesWithDirect) {
  Rng rng(7);
  for (int i = 0; i < 2; ++i) {
    const DensityMatrix rho = random_state(rng, 2, 2);
    const DiscordResult direct = discord_povm(rho, kCfg, PovmRoute::direct);
    const DiscordResult neumark = discord_povm(rho, kCfg, PovmRoute::neumark);
    EXPECT_NEAR(direct.value, neumark.value, 1e-5);
    EXPECT_EQ(std::get<Povm>(neumark.optimal_measurement).dim(), 2);
  }
}

TEST(Discord, DeterministicForFixedSeed) {
  Rng rng(8);
  const DensityMatrix rho = random_state(rng, 2, 2);
  const DiscordResult a = discord_povm(rho, kCfg), b = discord_povm(rho, kCfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.parameters, b.parameters);
  EXPECT_EQ(a.restart_values, b.restart_values);
}

TEST(Discord, ClassicalQuantumStatesSatisfyDefinition) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GenSpec spec;
    spec.family = Family::classical_quantum;
    spec.dims = {2, 2};
    spec.seed = seed;
    const DensityMatrix rho = gen(spec).state;
    const double mi = mutual_information(rho);
    const double j = classical_correlations(rho, kCfg, MeasurementClass::projective);
    const DiscordResult d = discord_projective(rho, kCfg);
    EXPECT_GE(mi, 0.0);
    EXPECT_NEAR(mi, j + d.value, 1e-8);
    EXPECT_LE(d.value, 1e-5);
  }
}

TEST(EntanglementEntropy, SpotValues) {
  EXPECT_NEAR(entanglement_entropy(PureState(oracle::ket({0, 1, 0, 0}), Dims{2, 2})), 0.0, 1e-14);
  EXPECT_NEAR(entanglement_entropy(oracle::phi_plus()), 1.0, 1e-14);
  EXPECT_NEAR(entanglement_entropy(PureState(oracle::ket({std::sqrt(0.8), 0, 0, std::sqrt(0.2)}), Dims{2, 2})),
              0.721928, 1e-6);
}

TEST(EofFlagged, SpotValues) {
  const SpectralDecomposition single{{1.0}, {oracle::phi_plus()}};
  EXPECT_NEAR(eof_flagged(single), 1.0, 1e-12);
  GenSpec spec;
  spec.family = Family::condition_pure_family;
  spec.dims = {4, 2};
  spec.block_dims = {2, 2};
  spec.weights = {0.5, 0.5};
  spec.schmidt_weights = {0.8, 0.5};
  const Generated g = gen(spec);
  EXPECT_NEAR(eof_flagged(*g.decomposition), kFamilyDiscord, 1e-12);
  const SpectralDecomposition products{{0.5, 0.5},
                                       {PureState(oracle::ket({1, 0, 0, 0}), Dims{2, 2}),
                                        PureState(oracle::ket({0, 0, 0, 1}), Dims{2, 2})}};
  EXPECT_NEAR(eof_flagged(products), 0.0, 1e-14);
  const SpectralDecomposition violating{{0.5, 0.5}, {oracle::phi_plus(), oracle::psi_plus()}};
  EXPECT_THROW(eof_flagged(violating), PreconditionError);
}

TEST(EofTwoQubitOracle, SpotValuesAndPureStates) {
  EXPECT_NEAR(eof_two_qubit_oracle(oracle::phi_plus().projector()), 1.0, 1e-12);
  EXPECT_NEAR(concurrence(oracle::phi_plus().projector()), 1.0, 1e-12);
  Rng rng(9);
  const DensityMatrix prod(oracle::kron(oracle::random_density_matrix(rng, 2), oracle::random_density_matrix(rng, 2)),
                           Dims{2, 2});
  EXPECT_NEAR(eof_two_qubit_oracle(prod), 0.0, 1e-12);
  for (int i = 0; i < 10; ++i) {
    const PureState psi(oracle::random_unit_vector(rng, 4), Dims{2, 2});
    EXPECT_NEAR(eof_two_qubit_oracle(psi.projector()), entanglement_entropy(psi), 1e-8);
  }
  EXPECT_THROW(eof_two_qubit_oracle(DensityMatrix(ComplexMatrix::Identity(6, 6) / 6.0, Dims{2, 3})),
               PreconditionError);
}

TEST(BinaryEntropy, Values) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_NEAR(binary_entropy(0.8), 0.7219280948873623, 1e-15);
}

}  // namespace
}  // namespace qdiscord
