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


#include "qdiscord/nelder_mead.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qdiscord {
namespace {

TEST(NelderMead, QuadraticBowl) {
  auto f = [](std::span<const double> x) { return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 0.5) * (x[1] + 0.5); };
  const NelderMeadResult r = nelder_mead(f, std::vector<double>{0.0, 0.0}, NelderMeadOptions{});
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], -0.5, 1e-4);
  EXPECT_LT(r.value, 1e-8);
  EXPECT_TRUE(r.converged);
}

TEST(NelderMead, Rosenbrock) {
  auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions opts;
  opts.max_iterations = 5000;
  opts.function_tolerance = 1e-14;
  const NelderMeadResult r = nelder_mead(f, std::vector<double>{-1.2, 1.0}, opts);
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
  EXPECT_NEAR(r.x[1], 1.0, 1e-3);
}

TEST(NelderMead, NeverWorseThanStart) {
  auto f = [](std::span<const double> x) { return std::sin(3 * x[0]) + std::cos(2 * x[1]) + 0.1 * x[2] * x[2]; };
  const std::vector<double> start{0.3, -0.7, 1.1};
  const NelderMeadResult r = nelder_mead(f, start, NelderMeadOptions{});
  EXPECT_LE(r.value, f(start));
  EXPECT_DOUBLE_EQ(r.value, f(r.x));
}

TEST(NelderMead, DeterministicAndBounded) {
  auto f = [](std::span<const double> x) { return std::abs(x[0]) + std::abs(x[1] - 2.0); };
  NelderMeadOptions opts;
  opts.max_iterations = 50;
  const NelderMeadResult a = nelder_mead(f, std::vector<double>{5.0, 5.0}, opts);
  const NelderMeadResult b = nelder_mead(f, std::vector<double>{5.0, 5.0}, opts);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.value, b.value);
  EXPECT_LE(a.iterations, 50);
}

TEST(NelderMead, EmptyParameterVector) {
  int calls = 0;
  auto f = [&](std::span<const double>) {
    ++calls;
    return 3.0;
  };
  const NelderMeadResult r = nelder_mead(f, std::vector<double>{}, NelderMeadOptions{});
  EXPECT_EQ(r.value, 3.0);
  EXPECT_EQ(calls, 1);
}

}  // namespace
}  // namespace qdiscord
