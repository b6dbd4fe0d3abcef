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

#pragma once

#include <filesystem>
#include <string>

#include "proxeq/problems.hpp"
#include "proxeq/solver.hpp"

namespace proxeq {

// Exit codes shared by the library entry point and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIterationCap = 3;
inline constexpr int kExitIoError = 4;

struct RunOptions {
  std::optional<std::uint64_t> seed_override;
  std::optional<long> probes_override;
  bool literal_condition = false;
};

struct SummaryRow {
  double epsilon = 0.0;
  long iterations = 0;
  long total_prox_calls = 0;
  double wall_time_s = 0.0;
  double certified_bound = 0.0;
  double measured_gap = 0.0;
  std::string gap_method;
};

/// Runs the experiment described by a JSON config file; writes per-run trace
/// files, summary.tsv and metadata.json into out_dir. Returns an exit code.
/// Diagnostics go to stderr.
int run_experiment(const std::filesystem::path& config_path,
                   const std::filesystem::path& out_dir, const RunOptions& options = {});

/// Least-squares exponent p of N ~ (1/epsilon)^p. Needs >= 3 rows.
double scaling_exponent(const std::vector<std::pair<double, long>>& eps_iterations);

std::vector<SummaryRow> read_summary(const std::filesystem::path& path);
void write_summary(const std::filesystem::path& path, const std::vector<SummaryRow>& rows);

/// Shortest round-trip decimal rendering, used for all emitted floats.
std::string format_double(double v);

}  // namespace proxeq
