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

// qdiscord: command-line front end.
//
//   qdiscord discord STATE.json [--route direct|neumark] [--class projective|povm|both]
//   qdiscord verify SUITE [--family satisfying|violating|both]
//   qdiscord gen [SPEC.json] [--family F --dims 4,2 --blocks 2,2 --weights .5,.5 ...]
//   qdiscord neumark POVM.json [--dilation OUT.json]
//
// Global flags: --seed --starts --tol --instances --format json|csv --out PATH.
// Exit codes: 0 success, 1 theorem-suite failure, 2 input error.

#include "qdiscord/discord.hpp"
#include "qdiscord/entropy.hpp"
#include "qdiscord/io.hpp"
#include "qdiscord/random.hpp"
#include "qdiscord/stategen.hpp"
#include "qdiscord/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace qdiscord;

constexpr int kExitOk = 0;
constexpr int kExitTheoremFailure = 1;
constexpr int kExitInputError = 2;

constexpr int kNeumarkTestStates = 10;

struct Globals {
  std::uint64_t seed = 0;
  int starts = OptimizerConfig{}.starts;
  double tol = OptimizerConfig{}.function_tolerance;
  int instances = SuiteOptions{}.instances;
  std::string format = "json";
  std::string out;
  std::vector<std::string> argv;

  OptimizerConfig optimizer() const {
    OptimizerConfig c;
    c.seed = seed;
    c.starts = starts;
    c.function_tolerance = tol;
    c.validate();
    return c;
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(g.out, text);
  }
}

json report_header(const Globals& g, const std::string& command) {
  std::string echo;
  for (const auto& a : g.argv) echo += (echo.empty() ? "" : " ") + a;
  return json{{"command", command}, {"argv", echo}, {"config", config_to_json(g.optimizer())}};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// CSV for flat reports: comment lines carry the config, then quantity,value rows.
std::string quantities_csv(const json& report) {
  std::ostringstream os;
  os << "# command: " << report.at("argv").get<std::string>() << "\n";
  os << "# config: " << report.at("config").dump() << "\n";
  if (report.contains("input_digest")) os << "# input_digest: " << report.at("input_digest").get<std::string>() << "\n";
  os << "quantity,value\n";
  for (const auto& [k, v] : report.at("quantities").items()) {
    os << k << "," << (v.is_number() ? num(v.get<double>()) : v.dump()) << "\n";
  }
  return os.str();
}

int cmd_discord(const Globals& g, const std::string& path, const std::string& route_name,
                const std::string& klass) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = read_file(path);
  const DensityMatrix rho = state_from_json(parse_json(text, path));
  if (rho.dims().size() < 2) throw InputError(path + ": state must have at least two subsystems");
  const OptimizerConfig cfg = g.optimizer();
  const PovmRoute route = route_name == "neumark" ? PovmRoute::neumark : PovmRoute::direct;

  const double s_a = von_neumann(rho.reduced_a());
  const double s_b = von_neumann(rho.reduced_b());
  const double s_ab = von_neumann(rho);
  const double mi = mutual_information(rho);

  json report = report_header(g, "discord");
  report["input"] = path;
  report["input_digest"] = digest(text);
  report["route"] = route_name;
  json q = {{"entropy_a", s_a}, {"entropy_b", s_b}, {"entropy_ab", s_ab}, {"mutual_information", mi}};
  json measurements = json::object();
  bool converged = true;

  auto record = [&](const std::string& tag, const DiscordResult& r) {
    q["min_conditional_entropy_" + tag] = r.min_conditional_entropy;
    q["classical_correlations_" + tag] = s_b - r.min_conditional_entropy;
    q["discord_" + tag] = r.value;
    q["restarts_agreeing_" + tag] = r.restarts_agreeing;
    json m = measurement_to_json(r.optimal_measurement);
    m["parameters"] = r.parameters;
    m["converged"] = r.converged;
    measurements[tag] = std::move(m);
    converged = converged && r.converged;
  };
  if (klass != "povm") record("projective", discord_projective(rho, cfg));
  if (klass != "projective") record("povm", discord_povm(rho, cfg, route));

  report["quantities"] = q;
  report["measurements"] = measurements;
  report["converged"] = converged;
  report["wall_time_s"] = seconds_since(t0);
  emit(g, g.format == "csv" ? quantities_csv(report) : report.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& suite_name, const std::string& family) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteOptions opts;
  opts.instances = g.instances;
  opts.seed = g.seed;
  opts.optimizer = g.optimizer();
  opts.thm1_family = thm1_family_from_string(family);
  const Suite suite = suite_from_string(suite_name);
  const std::vector<SuiteRow> rows = run_suite(suite, opts);

  int passed = 0, failed = 0, inconclusive = 0;
  json jrows = json::array();
  for (const auto& r : rows) {
    switch (r.verdict.outcome) {
      case Outcome::passed:
        ++passed;
        break;
      case Outcome::failed:
        ++failed;
        break;
      case Outcome::inconclusive:
        ++inconclusive;
        break;
    }
    json row = verdict_to_json(r.verdict);
    row["suite"] = r.suite;
    row["instance"] = r.instance;
    row["genspec"] = genspec_to_json(r.spec);
    jrows.push_back(std::move(row));
  }

  json report = report_header(g, "verify");
  report["suite"] = suite_name;
  report["family"] = family;
  report["instances"] = g.instances;
  report["verdicts"] = jrows;
  report["summary"] = {{"passed", passed}, {"failed", failed}, {"inconclusive", inconclusive}};
  report["wall_time_s"] = seconds_since(t0);

  if (g.format == "csv") {
    std::ostringstream os;
    os << "# command: " << report.at("argv").get<std::string>() << "\n";
    os << "# config: " << report.at("config").dump() << "\n";
    os << "suite,instance,seed,outcome,max_discrepancy,tolerance,quantities\n";
    for (const auto& r : rows) {
      std::string qs;
      for (const auto& [k, v] : r.verdict.quantities) qs += (qs.empty() ? "" : ";") + k + "=" + num(v);
      os << r.suite << "," << r.instance << "," << r.spec.seed << "," << to_string(r.verdict.outcome) << ","
         << num(r.verdict.max_discrepancy) << "," << num(r.verdict.tolerance_used) << "," << qs << "\n";
    }
    emit(g, os.str());
  } else {
    emit(g, report.dump(2) + "\n");
  }
  std::cerr << "verify " << suite_name << ": " << passed << " passed, " << failed << " failed, " << inconclusive
            << " inconclusive\n";
  return failed > 0 ? kExitTheoremFailure : kExitOk;
}

struct GenFlags {
  std::string spec_file;
  std::string family = "random_density";
  std::vector<Eigen::Index> dims{2, 2};
  std::vector<Eigen::Index> blocks;
  std::vector<double> weights;
  std::vector<double> schmidt_weights;
  Eigen::Index rank = 0;
  bool violating = false;
  bool bell = false;
};

int cmd_gen(const Globals& g, const GenFlags& f, bool seed_given) {
  GenSpec spec;
  if (!f.spec_file.empty()) {
    spec = genspec_from_json(parse_json(read_file(f.spec_file), f.spec_file));
    if (seed_given) spec.seed = g.seed;
  } else {
    spec.family = family_from_string(f.family);
    spec.dims = f.dims;
    spec.block_dims = f.blocks;
    spec.weights = f.weights;
    spec.schmidt_weights = f.schmidt_weights;
    spec.rank = f.rank;
    spec.bell_pair = f.bell;
    spec.seed = g.seed;
  }
  const Generated out = f.violating ? gen_violating(spec) : gen(spec);
  const std::string text = state_to_json(out.state).dump() + "\n";
  // Round-trip guard: the written file must parse back to the same matrix.
  const DensityMatrix back = state_from_json(parse_json(text, "generated state"));
  if (back.matrix() != out.state.matrix()) throw std::runtime_error("gen: state file does not round-trip");
  emit(g, text);
  return kExitOk;
}

int cmd_neumark(const Globals& g, const std::string& path, const std::string& dilation_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = read_file(path);
  const Povm povm = povm_from_json(parse_json(text, path));
  const NeumarkDilation dil = neumark_dilate(povm);

  Rng rng(g.seed);
  double kraus = 0.0, effects = 0.0, probs = 0.0;
  for (int i = 0; i < kNeumarkTestStates; ++i) {
    const ComplexMatrix gm = rng.ginibre(povm.dim(), povm.dim());
    const DensityMatrix rho = DensityMatrix::from_unnormalized(gm * gm.adjoint(), Dims{povm.dim()});
    const NeumarkResiduals r = neumark_residuals(dil, povm, rho);
    kraus = std::max(kraus, r.kraus_action);
    effects = std::max(effects, r.effects);
    probs = std::max(probs, r.probabilities);
  }

  const json jdil = dilation_to_json(dil);
  if (!dilation_path.empty()) write_file_atomic(dilation_path, jdil.dump(2) + "\n");

  json report = report_header(g, "neumark");
  report["input"] = path;
  report["input_digest"] = digest(text);
  report["test_states"] = kNeumarkTestStates;
  report["quantities"] = {{"kraus_action_residual", kraus},
                          {"effect_residual", effects},
                          {"probability_residual", probs},
                          {"ancilla_dim", dil.ancilla_dim}};
  report["dilation"] = jdil;
  report["wall_time_s"] = seconds_since(t0);
  emit(g, g.format == "csv" ? quantities_csv(report) : report.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  g.argv.assign(argv, argv + argc);

  CLI::App app{"qdiscord: quantum discord and measured conditional entropy toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* seed_opt = app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--starts", g.starts, "optimizer multi-starts")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "optimizer function tolerance")->check(CLI::PositiveNumber);
  app.add_option("--instances", g.instances, "instances per theorem suite")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "write output to PATH instead of stdout");

  std::string state_path, route = "direct", klass = "both";
  auto* discord = app.add_subcommand("discord", "discord, mutual information and classical correlations of a state");
  discord->add_option("state", state_path, "state file")->required();
  discord->add_option("--route", route, "POVM route")->check(CLI::IsMember({"direct", "neumark"}));
  discord->add_option("--class", klass, "measurement class")->check(CLI::IsMember({"projective", "povm", "both"}));

  std::string suite = "all", family = "both";
  auto* verify = app.add_subcommand("verify", "run theorem suites over generated instances");
  verify->add_option("suite", suite, "thm1|thm2|thm3|tripartite|saturation|all")
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "tripartite", "saturation", "all"}));
  verify->add_option("--family", family, "thm1 direction")->check(CLI::IsMember({"satisfying", "violating", "both"}));

  GenFlags gf;
  auto* gen = app.add_subcommand("gen", "write a generated state file");
  gen->add_option("spec", gf.spec_file, "GenSpec JSON file (flags are ignored when given)");
  gen->add_option("--family", gf.family, "state family");
  gen->add_option("--dims", gf.dims, "subsystem dimensions")->delimiter(',');
  gen->add_option("--blocks", gf.blocks, "A-subspace dimension per member")->delimiter(',');
  gen->add_option("--weights", gf.weights, "member weights")->delimiter(',');
  gen->add_option("--schmidt", gf.schmidt_weights, "per-member q for condition families")->delimiter(',');
  gen->add_option("--rank", gf.rank, "rank of random density states");
  gen->add_flag("--violating", gf.violating, "rank-two state violating the cross-term condition");
  gen->add_flag("--bell", gf.bell, "with --violating: use the Bell pair");

  std::string povm_path, dilation_path;
  auto* neumark = app.add_subcommand("neumark", "dilate a POVM to a projective measurement");
  neumark->add_option("povm", povm_path, "POVM file")->required();
  neumark->add_option("--dilation", dilation_path, "write the dilation to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*discord) return cmd_discord(g, state_path, route, klass);
    if (*verify) return cmd_verify(g, suite, family);
    if (*gen) return cmd_gen(g, gf, seed_opt->count() > 0);
    if (*neumark) return cmd_neumark(g, povm_path, dilation_path);
  } catch (const std::exception& e) {  // InputError, PreconditionError, I/O
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
