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

#include "qdiscord/suites.hpp"

#include "qdiscord/random.hpp"

namespace qdiscord {

namespace {

std::uint64_t instance_seed(Suite suite, int index, std::uint64_t seed, bool violating) {
  // Distinct streams per suite and direction; the i-th draw seeds instance i.
  Rng rng(seed * 0x100000001b3ULL + static_cast<std::uint64_t>(suite) * 2 + (violating ? 1 : 0));
  std::uint64_t s = 0;
  for (int i = 0; i <= index; ++i) s = rng.next();
  return s;
}

}  // namespace

Suite suite_from_string(const std::string& name) {
  if (name == "thm1") return Suite::thm1;
  if (name == "thm2") return Suite::thm2;
  if (name == "thm3") return Suite::thm3;
  if (name == "tripartite") return Suite::tripartite;
  if (name == "saturation") return Suite::saturation;
  if (name == "all") return Suite::all;
  throw PreconditionError("unknown suite '" + name + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::thm1:
      return "thm1";
    case Suite::thm2:
      return "thm2";
    case Suite::thm3:
      return "thm3";
    case Suite::tripartite:
      return "tripartite";
    case Suite::saturation:
      return "saturation";
    case Suite::all:
      return "all";
  }
  return "unknown";
}

Thm1Family thm1_family_from_string(const std::string& name) {
  if (name == "satisfying") return Thm1Family::satisfying;
  if (name == "violating") return Thm1Family::violating;
  if (name == "both") return Thm1Family::both;
  throw PreconditionError("unknown thm1 family '" + name + "'");
}

GenSpec suite_instance_spec(Suite suite, int index, std::uint64_t seed, bool violating) {
  GenSpec spec;
  spec.seed = instance_seed(suite, index, seed, violating);
  switch (suite) {
    case Suite::thm1:
      if (violating) {
        static const Dims kDims[] = {{2, 2}, {4, 2}, {4, 3}};
        spec.family = Family::random_density;  // informational; drawn by gen_violating
        spec.dims = kDims[index % 3];
      } else {
        spec.family = Family::condition_pure_family;
        spec.dims = index % 2 == 0 ? Dims{4, 2} : Dims{4, 3};
        spec.block_dims = index % 4 < 2 ? std::vector<Eigen::Index>{2, 2} : std::vector<Eigen::Index>{1, 1, 2};
      }
      break;
    case Suite::thm2:
    case Suite::tripartite:
      spec.family = Family::condition_pure_family;
      spec.dims = {4, 2};
      spec.block_dims = {2, 2};
      break;
    case Suite::thm3:
      spec.family = Family::orthogonal_mixed_family;
      spec.dims = {4, 2};
      spec.block_dims = {2, 2};
      break;
    case Suite::saturation:
      spec.family = index % 2 == 0 ? Family::random_density : Family::classical_quantum;
      spec.dims = {2, 2};
      break;
    case Suite::all:
      throw PreconditionError("suite_instance_spec: 'all' has no instances of its own");
  }
  return spec;
}

std::vector<SuiteRow> run_suite(Suite suite, const SuiteOptions& opts) {
  std::vector<SuiteRow> rows;
  if (suite == Suite::all) {
    for (Suite s : {Suite::thm1, Suite::thm2, Suite::thm3, Suite::tripartite, Suite::saturation}) {
      auto part = run_suite(s, opts);
      rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return rows;
  }
  const std::string name = to_string(suite);
  for (int i = 0; i < opts.instances; ++i) {
    if (suite == Suite::thm1) {
      for (bool violating : {false, true}) {
        if (violating && opts.thm1_family == Thm1Family::satisfying) continue;
        if (!violating && opts.thm1_family == Thm1Family::violating) continue;
        const GenSpec spec = suite_instance_spec(suite, i, opts.seed, violating);
        const Generated g = violating ? gen_violating(spec) : gen(spec);
        rows.push_back({name + (violating ? "/violating" : "/satisfying"), i, spec,
                        verify_thm1(g.state, opts.optimizer, g.decomposition)});
      }
      continue;
    }
    const GenSpec spec = suite_instance_spec(suite, i, opts.seed);
    const Generated g = gen(spec);
    TheoremVerdict v;
    switch (suite) {
      case Suite::thm2:
        v = verify_thm2(g.state, opts.optimizer, g.decomposition);
        break;
      case Suite::thm3:
        v = verify_thm3(*g.ensemble, opts.optimizer);
        break;
      case Suite::tripartite:
        v = verify_tripartite(g.state, opts.optimizer, g.decomposition);
        break;
      default:
        v = check_saturation(g.state, opts.optimizer, g.decomposition);
        break;
    }
    rows.push_back({name, i, spec, std::move(v)});
  }
  return rows;
}

}  // namespace qdiscord
