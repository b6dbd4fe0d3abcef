// Copyright 2026 The proxeq authors
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

#include <iostream>

#include <CLI11.hpp>

#include "proxeq/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"proxeq: adaptive proximal solver for equilibrium, VI and saddle problems"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "proxeq_out";
  std::uint64_t seed = 0;
  bool has_seed = false;
  long probes = 0;
  bool has_probes = false;
  bool literal = false;

  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "experiment config file (JSON)")->required();
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed, "seed override")->each([&](const std::string&) { has_seed = true; });
    cmd->add_option("--probes", probes, "probe count override")
        ->each([&](const std::string&) { has_probes = true; });
    cmd->add_flag("--literal-condition", literal,
                  "use the acceptance condition exactly as printed (erratum comparison)");
  };

  CLI::App* solve = app.add_subcommand("solve", "run a single-accuracy experiment");
  add_run_flags(solve);
  CLI::App* sweep = app.add_subcommand("sweep", "run an epsilon sweep");
  add_run_flags(sweep);

  std::string summary_path;
  CLI::App* report = app.add_subcommand("report", "fit the iteration-count scaling exponent");
  report->add_option("summary", summary_path, "summary.tsv produced by sweep")->required();

  CLI11_PARSE(app, argc, argv);

  if (report->parsed()) {
    try {
      auto rows = proxeq::read_summary(summary_path);
      std::vector<std::pair<double, long>> pts;
      for (const auto& r : rows) pts.emplace_back(r.epsilon, r.iterations);
      double p = proxeq::scaling_exponent(pts);
      std::cout << "rows\t" << rows.size() << "\n";
      std::cout << "scaling_exponent\t" << proxeq::format_double(p) << "\n";
      return proxeq::kExitOk;
    } catch (const std::invalid_argument& e) {
      std::cerr << "report error: " << e.what() << "\n";
      return proxeq::kExitConfigError;
    } catch (const std::exception& e) {
      std::cerr << "io error: " << e.what() << "\n";
      return proxeq::kExitIoError;
    }
  }

  proxeq::RunOptions opts;
  if (has_seed) opts.seed_override = seed;
  if (has_probes) opts.probes_override = probes;
  opts.literal_condition = literal;
  int status = proxeq::run_experiment(config_path, out_dir, opts);
  if (status == proxeq::kExitOk) std::cout << "wrote " << out_dir << "/summary.tsv\n";
  return status;
}
