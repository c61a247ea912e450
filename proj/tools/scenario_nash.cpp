// Copyright 2026 The scenario-nash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// scenario-nash: command-line front end.
//
//   scenario-nash solve     --config c.json --seed S [--out DIR]
//   scenario-nash certify   --M 500 --beta 1e-6 --k 4 --kind wait_and_judge
//   scenario-nash compress  --config c.json --seed S --method support|greedy
//   scenario-nash validate  --config c.json --seed S [--kind cost|ne] [--trials T]
//   scenario-nash table     --config c.json --seed S [--runs R] [--out DIR]
//   scenario-nash scaling   --config c.json --seed S [--runs R] [--out DIR]
//   scenario-nash trace     --config c.json --seed S [--out DIR]
//
// The exit status is 0 only if every assertion of the run holds.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scenash/certificates.hpp"
#include "scenash/compression.hpp"
#include "scenash/ev_game.hpp"
#include "scenash/experiments.hpp"
#include "scenash/io.hpp"
#include "scenash/solver.hpp"
#include "scenash/validation.hpp"

namespace fs = std::filesystem;
using namespace scenash;

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> agents, dim, samples, runs, fresh_draws;
  std::optional<double> beta, tau, eta0, gamma_out;
  std::string out_dir;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool seeded) {
  cmd->add_option("--config", o.config_path, "JSON configuration file")->check(CLI::ExistingFile);
  auto* seed = cmd->add_option("--seed", o.seed, "base random seed");
  if (seeded) seed->required();
  cmd->add_option("--N", o.agents, "number of agents");
  cmd->add_option("--n", o.dim, "slots per agent");
  cmd->add_option("--M", o.samples, "number of training scenarios");
  cmd->add_option("--beta", o.beta, "confidence parameter");
  cmd->add_option("--tau", o.tau, "proximal weight");
  cmd->add_option("--eta0", o.eta0, "Tikhonov schedule scale");
  cmd->add_option("--gamma-out", o.gamma_out, "outer stopping tolerance");
  cmd->add_option("--out", o.out_dir, "output directory");
}

struct Loaded {
  ExperimentConfig config;
  std::optional<EvInstance> instance;  // set when the config embeds one
};

Loaded load(const CommonOptions& o) {
  Loaded l;
  if (!o.config_path.empty()) {
    const Json j = read_json_file(o.config_path);
    update_experiment_config(l.config, j);
    if (j.contains("instance")) {
      const Json& inst = j.at("instance");
      if (inst.is_string()) {
        fs::path p = inst.get<std::string>();
        if (p.is_relative()) p = fs::path(o.config_path).parent_path() / p;
        l.instance = instance_from_json(read_json_file(p));
      } else {
        l.instance = instance_from_json(inst);
      }
    }
  }
  ExperimentConfig& c = l.config;
  if (o.agents) c.agents = *o.agents;
  if (o.dim) c.dim = *o.dim;
  if (o.samples) c.samples = *o.samples;
  if (o.beta) c.beta = *o.beta;
  if (o.tau) c.solver.tau = *o.tau;
  if (o.eta0) c.solver.eta0 = *o.eta0;
  if (o.gamma_out) c.solver.gamma_out = *o.gamma_out;
  if (o.fresh_draws) c.fresh_draws = *o.fresh_draws;
  if (!o.out_dir.empty()) c.output_dir = o.out_dir;
  if (o.seed) {
    const std::size_t runs = o.runs.value_or(c.seeds.empty() ? 1 : c.seeds.size());
    c.seeds.clear();
    for (std::size_t r = 0; r < runs; ++r) c.seeds.push_back(*o.seed + r);
  }
  if (l.instance) {
    c.agents = l.instance->params.agents.size();
    c.dim = l.instance->params.a0.size();
    c.samples = l.instance->scenarios.size();
  }
  return l;
}

EvInstance instance_of(const Loaded& l) {
  if (l.instance) return *l.instance;
  if (l.config.seeds.empty()) throw std::invalid_argument("--seed is required to draw an instance");
  return experiment_instance(l.config, l.config.dim, l.config.samples, l.config.seeds.front());
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Writes through `write` to DIR/name when an output directory is set, and
// to stdout otherwise.
template <typename Writer>
void emit_csv(const std::string& dir, const std::string& name, Writer write) {
  if (dir.empty()) {
    write(std::cout);
    return;
  }
  fs::create_directories(dir);
  std::ofstream out(fs::path(dir) / name);
  if (!out) throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
  write(out);
}

int cmd_solve(const CommonOptions& o) {
  const Loaded l = load(o);
  const EvInstance inst = instance_of(l);
  const EvChargingGame game(inst.params);
  const SolveResult result = solve_ne(game, inst.scenarios, l.config.solver);
  Json j = to_json(result);
  if (!l.config.output_dir.empty()) {
    fs::create_directories(l.config.output_dir);
    write_json_file(fs::path(l.config.output_dir) / "solution.json", j);
    write_json_file(fs::path(l.config.output_dir) / "instance.json", instance_to_json(inst));
    emit_csv(l.config.output_dir, "trace.csv", [&](std::ostream& out) { result.trace.write_csv(out); });
  }
  emit(j);
  return 0;
}

int cmd_certify(std::size_t samples, double beta, std::size_t k, const std::string& kind,
                std::size_t agents, std::size_t dim, bool separable, bool nondegenerate) {
  const CertificateKind parsed = certificate_kind_from_string(kind);
  const Certificate cert = parsed == CertificateKind::kAPriori
                               ? eps_a_priori(agents, dim, samples, beta, separable, nondegenerate)
                               : a_posteriori(samples, beta, k, parsed);
  emit(to_json(cert));
  return 0;
}

int cmd_compress(const CommonOptions& o, const std::string& method) {
  const Loaded l = load(o);
  const EvInstance inst = instance_of(l);
  const EvChargingGame game(inst.params);
  const SolverConfig& cfg = l.config.solver;
  const SolveResult result = solve_ne(game, inst.scenarios, cfg);
  const double delta = equality_tolerance(cfg, game.num_agents(), game.agent_dim());
  CompressionReport report;
  if (method == "greedy") {
    report = greedy_compression(game, inst.scenarios, result, cfg, delta);
  } else {
    report = support_compression(game, inst.scenarios, result, cfg, delta);
  }
  emit(to_json(report));
  return report.verification == Verification::kVerified ? 0 : 1;
}

int cmd_validate(const CommonOptions& o, const std::string& kind, const std::string& per_draw_csv) {
  const Loaded l = load(o);
  const EvInstance inst = instance_of(l);
  const EvChargingGame game(inst.params);
  const SolverConfig& cfg = l.config.solver;
  const SolveResult result = solve_ne(game, inst.scenarios, cfg);
  const std::size_t d_star = support_from_weights(result.y_star).size();
  const Certificate cert = a_posteriori(inst.scenarios.size(), l.config.beta, d_star,
                                        CertificateKind::kWaitAndJudge);
  const EvScenarioSampler sampler(game.agent_dim(), l.config.scenario_params);
  const std::uint64_t seed = derive_seed(*o.seed, 3);

  ViolationEstimate est;
  if (kind == "ne") {
    const double delta = equality_tolerance(cfg, game.num_agents(), game.agent_dim());
    est = empirical_violation_ne(game, inst.scenarios, result.x_star, sampler, l.config.fresh_draws,
                                 cfg, delta, seed);
  } else {
    std::vector<double> costs;
    est = empirical_violation_cost(game, result.x_star, result.gamma_star, sampler,
                                   l.config.fresh_draws, seed, per_draw_csv.empty() ? nullptr : &costs);
    if (!per_draw_csv.empty()) {
      std::ofstream out(per_draw_csv);
      if (!out) throw std::runtime_error("cannot write " + per_draw_csv);
      out.precision(17);
      out << "draw,g,violated\n";
      for (std::size_t t = 0; t < costs.size(); ++t)
        out << t << ',' << costs[t] << ',' << (costs[t] > result.gamma_star ? 1 : 0) << '\n';
    }
  }
  const bool conforms = certificate_conformance(est, cert);
  emit({{"estimate", to_json(est)}, {"certificate", to_json(cert)}, {"gamma_star", result.gamma_star},
        {"conforms", conforms}});
  return conforms ? 0 : 1;
}

int cmd_table(const CommonOptions& o) {
  const Loaded l = load(o);
  const CertificateTable table = run_certificate_table(l.config);
  emit_csv(l.config.output_dir, "certificate_table.csv", [&](std::ostream& out) { table.write_csv(out); });
  if (!l.config.output_dir.empty())
    emit_csv(l.config.output_dir, "certificate_runs.csv", [&](std::ostream& out) { table.write_runs_csv(out); });
  const bool ok = table.ordering_holds() && table.all_verified();
  if (!ok) std::cerr << "table: ordering empirical <= wait-and-judge <= split or verification failed\n";
  return ok ? 0 : 1;
}

int cmd_scaling(const CommonOptions& o, const std::vector<std::size_t>& dims,
                const std::vector<std::size_t>& samples) {
  Loaded l = load(o);
  if (!dims.empty()) l.config.dim_list = dims;
  if (!samples.empty()) l.config.samples_list = samples;
  if (l.config.dim_list.empty()) l.config.dim_list = {l.config.dim};
  if (l.config.samples_list.empty()) l.config.samples_list = {l.config.samples};
  const ScalingSweep sweep = run_dstar_scaling(l.config);
  emit_csv(l.config.output_dir, "dstar_scaling.csv", [&](std::ostream& out) { sweep.write_csv(out); });
  for (const auto& row : sweep.rows)
    if (!row.d_star_le_n)
      std::cerr << "note: d* exceeded n at n=" << row.dim << " M=" << row.samples << '\n';
  return sweep.within_bound() ? 0 : 1;
}

int cmd_trace(const CommonOptions& o) {
  const Loaded l = load(o);
  const ConvergenceTrace trace = run_convergence_trace(l.config);
  emit_csv(l.config.output_dir, "convergence_trace.csv", [&](std::ostream& out) { trace.write_csv(out); });
  return trace.terminated() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust Nash equilibria of scenario games with PAC certificates"};
  app.require_subcommand(1);

  CommonOptions solve_opts, compress_opts, validate_opts, table_opts, scaling_opts, trace_opts;

  auto* solve = app.add_subcommand("solve", "compute an equilibrium");
  add_common(solve, solve_opts, false);

  std::size_t cert_m = 0, cert_k = 0, cert_agents = 0, cert_dim = 0;
  double cert_beta = 0.0;
  std::string cert_kind = "split";
  bool separable = false, nondegenerate = false;
  auto* certify = app.add_subcommand("certify", "evaluate a violation bound");
  certify->add_option("--M", cert_m, "number of scenarios")->required();
  certify->add_option("--beta", cert_beta, "confidence parameter")->required();
  certify->add_option("--k", cert_k, "compression cardinality");
  certify->add_option("--kind", cert_kind, "split | wait_and_judge | a_priori");
  certify->add_option("--N", cert_agents, "agents (a priori)");
  certify->add_option("--n", cert_dim, "slots per agent (a priori)");
  certify->add_flag("--separable", separable, "f_i and g separately convex (a priori)");
  certify->add_flag("--nondegenerate", nondegenerate, "use the wait-and-judge form (a priori)");

  std::string method = "support";
  auto* compress = app.add_subcommand("compress", "extract a compression set");
  add_common(compress, compress_opts, false);
  compress->add_option("--method", method, "support | greedy")
      ->check(CLI::IsMember({"support", "greedy"}));

  std::string violation_kind = "cost", per_draw_csv;
  auto* validate = app.add_subcommand("validate", "estimate the violation probability");
  add_common(validate, validate_opts, true);
  validate->add_option("--kind", violation_kind, "cost | ne")->check(CLI::IsMember({"cost", "ne"}));
  validate->add_option("--trials", validate_opts.fresh_draws, "fresh draws");
  validate->add_option("--per-draw-csv", per_draw_csv, "write g(x*, theta) per draw");

  auto* table = app.add_subcommand("table", "certificate table over seeds");
  add_common(table, table_opts, true);
  table->add_option("--runs", table_opts.runs, "number of seeds starting at --seed");
  table->add_option("--trials", table_opts.fresh_draws, "fresh draws per seed");

  std::vector<std::size_t> dims, sample_counts;
  auto* scaling = app.add_subcommand("scaling", "d* versus n and M");
  add_common(scaling, scaling_opts, true);
  scaling->add_option("--runs", scaling_opts.runs, "number of seeds starting at --seed");
  scaling->add_option("--n-list", dims, "slot counts")->delimiter(',');
  scaling->add_option("--M-list", sample_counts, "scenario counts")->delimiter(',');

  auto* trace = app.add_subcommand("trace", "per-iteration convergence trace");
  add_common(trace, trace_opts, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      if (!solve_opts.seed && solve_opts.config_path.empty())
        throw std::invalid_argument("solve needs --config with an instance, or --seed");
      return cmd_solve(solve_opts);
    }
    if (*certify)
      return cmd_certify(cert_m, cert_beta, cert_k, cert_kind, cert_agents, cert_dim, separable,
                         nondegenerate);
    if (*compress) return cmd_compress(compress_opts, method);
    if (*validate) return cmd_validate(validate_opts, violation_kind, per_draw_csv);
    if (*table) return cmd_table(table_opts);
    if (*scaling) return cmd_scaling(scaling_opts, dims, sample_counts);
    if (*trace) return cmd_trace(trace_opts);
  } catch (const std::exception& e) {
    std::cerr << "scenario-nash: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
