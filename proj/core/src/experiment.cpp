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

#include "proxeq/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "proxeq/certificates.hpp"

namespace proxeq {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

double scaling_exponent(const std::vector<std::pair<double, long>>& eps_iterations) {
  if (eps_iterations.size() < 3)
    throw std::invalid_argument("scaling fit needs at least 3 rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(eps_iterations.size());
  for (auto [eps, iters] : eps_iterations) {
    if (eps <= 0.0 || iters <= 0) throw std::invalid_argument("scaling fit needs positive data");
    double x = std::log(1.0 / eps);
    double y = std::log(static_cast<double>(iters));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("scaling fit is degenerate");
  return (n * sxy - sx * sy) / denom;
}

namespace {

struct ResolvedProblem {
  EquilibriumModel model;
  FeasibleSet set;
  ProxSetup setup;
  std::optional<Point> x0;
  std::string type;
  // gap evaluation hooks
  std::optional<SaddleModel> saddle;
  std::optional<AffineOperator> affine;
};

const char kTraceHeader[] = "k\tL_k\tS_k\tprox_calls\tcondition_retries";
const char kSummaryHeader[] =
    "epsilon\tN\ttotal_prox_calls\twall_time_s\tcertified_bound\tmeasured_gap\tgap_method";

ResolvedProblem resolve_problem(const nlohmann::json& cfg, std::uint64_t seed) {
  const auto& p = cfg.at("problem");
  std::string type = p.at("type").get<std::string>();
  std::string prox = cfg.value("prox", std::string("euclidean"));
  if (prox != "euclidean" && prox != "entropy")
    throw std::invalid_argument("unknown prox setup: " + prox);

  ResolvedProblem r{.model = {}, .set = FeasibleSet::simplex(1), .setup = euclidean_setup(),
                    .x0 = std::nullopt, .type = type, .saddle = std::nullopt,
                    .affine = std::nullopt};
  r.setup = prox == "euclidean" ? euclidean_setup() : entropy_setup();

  if (type == "matrix_game") {
    auto rows = p.at("matrix").get<std::vector<std::vector<double>>>();
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (rows[i].size() != m.cols) throw std::invalid_argument("ragged matrix");
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    r.saddle = matrix_game(m);
    r.model = r.saddle->base;
    r.set = matrix_game_set(m);
    return r;
  }
  if (type == "affine_vi") {
    auto dim = p.value("dim", std::size_t{10});
    double mu = p.value("mu", 0.1);
    double skew = p.value("skew", 1.0);
    AffineVI vi = make_affine_vi(dim, seed, mu, skew);
    r.model = vi.model;
    r.affine = vi.op;
    std::string set_kind = p.value("set", std::string("ball"));
    if (set_kind == "ball")
      r.set = FeasibleSet::ball(Point(dim, 0.0), p.value("radius", 1.0));
    else if (set_kind == "simplex")
      r.set = FeasibleSet::simplex(dim);
    else
      throw std::invalid_argument("unknown feasible set: " + set_kind);
    return r;
  }
  if (type == "fts") {
    FTSInstance inst = p.contains("instance_file")
                           ? load_instance(p.at("instance_file").get<std::string>())
                           : fts_reference_instance(p.value("seed", seed));
    r.saddle = fts_saddle(inst);
    r.model = r.saddle->base;
    r.set = fts_feasible_set(inst);
    r.x0 = fts_initial_point(inst);
    return r;
  }
  if (type == "holder_vi") {
    auto dim = p.value("dim", std::size_t{10});
    HolderVI h = holder_vi(p.value("nu", 1.0), p.value("scale", 1.0), dim, seed);
    r.model = h.model;
    r.set = FeasibleSet::ball(Point(dim, 0.0), p.value("radius", 1.0));
    return r;
  }
  throw std::invalid_argument("unknown problem type: " + type);
}

void write_trace(const std::filesystem::path& path, const SolverTrace& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace file: " + path.string());
  out << kTraceHeader << "\n";
  for (const auto& rec : trace.records) {
    out << rec.index << "\t" << format_double(rec.L) << "\t" << format_double(rec.S) << "\t"
        << rec.prox_calls << "\t" << (rec.condition_checks - 1) << "\n";
  }
  if (!out) throw std::runtime_error("failed writing trace file: " + path.string());
}

}  // namespace

void write_summary(const std::filesystem::path& path, const std::vector<SummaryRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open summary file: " + path.string());
  out << kSummaryHeader << "\n";
  for (const auto& r : rows) {
    out << format_double(r.epsilon) << "\t" << r.iterations << "\t" << r.total_prox_calls << "\t"
        << format_double(r.wall_time_s) << "\t" << format_double(r.certified_bound) << "\t"
        << format_double(r.measured_gap) << "\t" << r.gap_method << "\n";
  }
  if (!out) throw std::runtime_error("failed writing summary file: " + path.string());
}

std::vector<SummaryRow> read_summary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open summary file: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kSummaryHeader)
    throw std::runtime_error("bad summary header in " + path.string());
  std::vector<SummaryRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    SummaryRow r;
    std::string tok;
    auto next = [&]() {
      if (!std::getline(ss, tok, '\t')) throw std::runtime_error("short summary row");
      return tok;
    };
    r.epsilon = std::stod(next());
    r.iterations = std::stol(next());
    r.total_prox_calls = std::stol(next());
    r.wall_time_s = std::stod(next());
    r.certified_bound = std::stod(next());
    r.measured_gap = std::stod(next());
    r.gap_method = next();
    rows.push_back(std::move(r));
  }
  return rows;
}

int run_experiment(const std::filesystem::path& config_path,
                   const std::filesystem::path& out_dir, const RunOptions& options) {
  nlohmann::json cfg;
  std::vector<double> epsilons;
  std::uint64_t seed = 1;
  long probes = 1000;
  try {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config " << config_path << "\n";
      return kExitConfigError;
    }
    cfg = nlohmann::json::parse(in);

    const auto& sol = cfg.at("solver");
    if (sol.contains("epsilons"))
      epsilons = sol.at("epsilons").get<std::vector<double>>();
    else if (sol.contains("epsilon"))
      epsilons = {sol.at("epsilon").get<double>()};
    if (epsilons.empty()) throw std::invalid_argument("epsilon list must be nonempty");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
      if (epsilons[i] <= 0.0) throw std::invalid_argument("epsilon must be positive");
      if (i > 0 && epsilons[i] >= epsilons[i - 1])
        throw std::invalid_argument("epsilon list must be strictly decreasing");
    }
    if (sol.value("delta", 0.0) < 0.0 || sol.value("delta_tilde", 0.0) < 0.0)
      throw std::invalid_argument("tolerances must be nonnegative");

    seed = options.seed_override.value_or(cfg.value("seed", std::uint64_t{1}));
    probes = options.probes_override.value_or(cfg.value("probes", long{1000}));
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    std::filesystem::create_directories(out_dir);
  } catch (const std::exception& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIoError;
  }

  bool cap_hit = false;
  std::vector<SummaryRow> summary;
  try {
    ResolvedProblem prob = resolve_problem(cfg, seed);
    const auto& sol = cfg.at("solver");
    double delta_fixed = sol.value("delta", 0.0);
    double delta_eps_fraction = sol.value("delta_eps_fraction", 0.0);

    for (std::size_t i = 0; i < epsilons.size(); ++i) {
      SolverConfig sc;
      sc.epsilon = epsilons[i];
      sc.L0 = sol.value("L0", 1.0);
      sc.delta_tilde = sol.value("delta_tilde", 0.0);
      sc.max_outer_iterations = sol.value("max_iterations", long{1000000});
      sc.stop_multiplier = sol.value("stop_multiplier", 1.0);
      sc.literal_condition = options.literal_condition;
      if (prob.x0) sc.x0_override = prob.x0;

      EquilibriumModel model = prob.model;
      model.delta = delta_fixed + delta_eps_fraction * sc.epsilon;

      auto t0 = std::chrono::steady_clock::now();
      SolverTrace trace = run(model, prob.set, prob.setup, sc);
      auto t1 = std::chrono::steady_clock::now();
      if (trace.stop_reason != StopReason::criterion_met) cap_hit = true;

      SummaryRow row;
      row.epsilon = sc.epsilon;
      row.iterations = static_cast<long>(trace.records.size());
      row.total_prox_calls = trace.total_prox_calls;
      row.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
      row.certified_bound = theoretical_bound(trace, model, sc);

      GapReport gap;
      if (prob.saddle && prob.saddle->bilinear) {
        gap = saddle_gap(*prob.saddle, prob.saddle->split_u(trace.ergodic_point),
                         prob.saddle->split_v(trace.ergodic_point), GapMethod::exact);
      } else if (prob.affine) {
        gap = vi_dual_gap(*prob.affine, prob.set, trace.ergodic_point);
      } else {
        auto probe_pts = make_probes(prob.set, probes, seed + 1000 + i);
        gap = equilibrium_residual(prob.model, prob.set, trace.ergodic_point, probe_pts);
      }
      row.measured_gap = gap.measured_gap;
      row.gap_method = to_string(gap.method);
      summary.push_back(std::move(row));

      char name[64];
      std::snprintf(name, sizeof(name), "trace_%03zu.tsv", i);
      write_trace(out_dir / name, trace);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }

  try {
    write_summary(out_dir / "summary.tsv", summary);
    nlohmann::json meta;
    meta["config"] = cfg;
    meta["seed"] = seed;
    meta["probes"] = probes;
    meta["literal_condition"] = options.literal_condition;
    std::ofstream mout(out_dir / "metadata.json");
    if (!mout) throw std::runtime_error("cannot open metadata.json");
    mout << meta.dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIoError;
  }

  return cap_hit ? kExitIterationCap : kExitOk;
}

}  // namespace proxeq
