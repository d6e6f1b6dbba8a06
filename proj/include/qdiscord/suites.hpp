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

#pragma once

#include "qdiscord/discord.hpp"
#include "qdiscord/stategen.hpp"
#include "qdiscord/theorems.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qdiscord {

enum class Suite { thm1, thm2, thm3, tripartite, saturation, all };

Suite suite_from_string(const std::string& name);
std::string to_string(Suite s);

enum class Thm1Family { satisfying, violating, both };

Thm1Family thm1_family_from_string(const std::string& name);

struct SuiteOptions {
  int instances = 10;
  std::uint64_t seed = 7;
  OptimizerConfig optimizer;
  Thm1Family thm1_family = Thm1Family::both;
};

struct SuiteRow {
  std::string suite;
  int instance = 0;
  GenSpec spec;
  TheoremVerdict verdict;
};

/// Generates seeded instances for the suite and verifies each one. `all` runs
/// every suite in turn.
std::vector<SuiteRow> run_suite(Suite suite, const SuiteOptions& opts);

/// The GenSpec used for instance `index` of a suite (thm1 rows may come from
/// gen_violating; see `violating`).
GenSpec suite_instance_spec(Suite suite, int index, std::uint64_t seed, bool violating = false);

}  // namespace qdiscord
