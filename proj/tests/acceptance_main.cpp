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

// Acceptance suite: one pass/fail line per criterion. Optional argv[1] names
// the directory for generated reports (default: current directory).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "proxeq/certificates.hpp"
#include "proxeq/experiment.hpp"
#include "proxeq/problems.hpp"
#include "proxeq/solver.hpp"

using namespace proxeq;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct AffineRun {
  SolverTrace trace;
  double lipschitz = 0.0;
  double l0 = 0.0;
};

std::vector<AffineRun> g_affine_runs;  // shared by criteria 1, 3, 4, 5

// 20 randomized monotone affine VIs, alternating ball and simplex.
Check criterion_1() {
  Check c;
  Timer timer;
  for (int i = 0; i < 20; ++i) {
    std::size_t dim = 5 + static_cast<std::size_t>(splitmix64(i) % 46);  // 5..50
    auto vi = make_affine_vi(dim, 1000 + i);
    FeasibleSet set = (i % 2 == 0) ? FeasibleSet::ball(Point(dim, 0.0), 1.0)
                                   : FeasibleSet::simplex(dim);
    SolverConfig config;
    config.epsilon = 1e-3;
    config.L0 = 1.0;
    auto trace = run(vi.model, set, euclidean_setup(), config);
    c.require(trace.stop_reason == StopReason::criterion_met,
              "instance " + std::to_string(i) + " did not meet the stopping criterion");
    double bound = theoretical_bound(trace, vi.model, config);
    c.require(bound <= config.epsilon + 1e-12,
              "instance " + std::to_string(i) + " bound " + format_double(bound) + " > epsilon");

    auto probes = make_probes(set, 100000, 9000 + i);
    auto residual = equilibrium_residual(vi.model, set, trace.ergodic_point, probes);
    c.require(residual.measured_gap <= bound + 1e-12,
              "instance " + std::to_string(i) + " residual " +
                  format_double(residual.measured_gap) + " > bound " + format_double(bound));
    g_affine_runs.push_back({std::move(trace), vi.lipschitz, config.L0});
  }
  double t = timer.seconds();
  c.require(t < 60.0, "runtime " + format_double(t) + "s >= 60s");
  if (c.ok) c.detail = "20 instances, " + format_double(t) + "s";
  return c;
}

// 10 random matrix games, exact vertex duality gap at epsilon = 1e-3.
Check criterion_2() {
  Check c;
  Timer timer;
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) {
    std::size_t rows = 2 + rng() % 9, cols = 2 + rng() % 9;  // 2..10
    Matrix m(rows, cols);
    for (auto& v : m.data) v = uniform(rng, -1.0, 1.0);
    auto saddle = matrix_game(m);
    auto set = matrix_game_set(m);
    SolverConfig config;
    config.epsilon = 1e-3;
    auto trace = run(saddle.base, set, entropy_setup(), config);
    c.require(trace.stop_reason == StopReason::criterion_met,
              "game " + std::to_string(i) + " did not meet the stopping criterion");
    auto gap = saddle_gap(saddle, saddle.split_u(trace.ergodic_point),
                          saddle.split_v(trace.ergodic_point), GapMethod::exact);
    c.require(gap.measured_gap <= config.epsilon + 1e-9,
              "game " + std::to_string(i) + " gap " + format_double(gap.measured_gap));
  }
  double t = timer.seconds();
  c.require(t < 30.0, "runtime " + format_double(t) + "s >= 30s");
  if (c.ok) c.detail = "10 games, " + format_double(t) + "s";
  return c;
}

// Iteration bound N <= ceil(2 L1 D / eps) + 1 with the constant known exactly.
Check criterion_3() {
  Check c;
  auto vi = make_affine_vi(10, 4242);
  auto set = FeasibleSet::ball(Point(10, 0.0), 1.0);
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    SolverConfig config;
    config.epsilon = eps;
    config.L0 = vi.lipschitz;
    auto trace = run(vi.model, set, euclidean_setup(), config);
    c.require(trace.stop_reason == StopReason::criterion_met, "run did not stop by criterion");
    double d = trace.diameter_bound;
    long bound = static_cast<long>(std::ceil(2.0 * vi.lipschitz * d / eps)) + 1;
    long n = static_cast<long>(trace.records.size());
    c.require(n <= bound, "eps " + format_double(eps) + ": N " + std::to_string(n) + " > " +
                              std::to_string(bound));
    g_affine_runs.push_back({std::move(trace), vi.lipschitz, config.L0});
  }
  if (c.ok) c.detail = "4 sweeps within the bound";
  return c;
}

// Prox-call budget on every affine run recorded so far.
Check criterion_4() {
  Check c;
  c.require(!g_affine_runs.empty(), "no affine runs recorded");
  for (std::size_t i = 0; i < g_affine_runs.size(); ++i) {
    const auto& r = g_affine_runs[i];
    double n = static_cast<double>(r.trace.records.size());
    double budget = 2.0 * n + std::log2(r.trace.max_accepted_L / r.l0) + 2.0;
    c.require(static_cast<double>(r.trace.total_prox_calls) <= budget,
              "run " + std::to_string(i) + ": " + std::to_string(r.trace.total_prox_calls) +
                  " calls > budget " + format_double(budget));
  }
  if (c.ok) c.detail = std::to_string(g_affine_runs.size()) + " traces within budget";
  return c;
}

// Accepted constants never exceed twice the true one.
Check criterion_5() {
  Check c;
  c.require(!g_affine_runs.empty(), "no affine runs recorded");
  for (std::size_t i = 0; i < g_affine_runs.size(); ++i) {
    const auto& r = g_affine_runs[i];
    double ceiling = 2.0 * std::max(r.lipschitz, r.l0) * (1.0 + 1e-9);
    for (const auto& rec : r.trace.records)
      c.require(rec.L <= ceiling, "run " + std::to_string(i) + ": accepted L " +
                                      format_double(rec.L) + " > " + format_double(ceiling));
  }
  if (c.ok) c.detail = "all accepted constants <= 2 max(L, L0)";
  return c;
}

// Injected model noise and loose prox tolerance, run 10x past the criterion.
Check criterion_6() {
  Check c;
  Timer timer;
  const double delta_inj = 1e-2, delta_tilde = 1e-2, eps = 1e-3;
  for (int i = 0; i < 5; ++i) {
    std::size_t dim = 5 + static_cast<std::size_t>(splitmix64(i) % 46);
    auto vi = make_affine_vi(dim, 1000 + i);
    FeasibleSet set = (i % 2 == 0) ? FeasibleSet::ball(Point(dim, 0.0), 1.0)
                                   : FeasibleSet::simplex(dim);
    auto noisy = with_injected_noise(vi.model, delta_inj, 500 + i, delta_inj);
    SolverConfig config;
    config.epsilon = eps;
    config.delta_tilde = delta_tilde;
    config.stop_multiplier = 10.0;
    auto trace = run(noisy, set, euclidean_setup(), config);
    c.require(trace.stop_reason == StopReason::criterion_met,
              "instance " + std::to_string(i) + " did not meet the stopping criterion");
    // Residual is measured against the clean model.
    auto probes = make_probes(set, 10000, 700 + i);
    auto residual = equilibrium_residual(vi.model, set, trace.ergodic_point, probes);
    double allowance = eps + 2.0 * delta_tilde + delta_inj + 1e-3;
    c.require(residual.measured_gap <= allowance,
              "instance " + std::to_string(i) + " residual " +
                  format_double(residual.measured_gap) + " > " + format_double(allowance));
  }
  if (c.ok) c.detail = "5 noisy overruns, " + format_double(timer.seconds()) + "s";
  return c;
}

// Fermat-Torricelli-Steiner sweep: scaling exponent of N vs 1/eps.
Check criterion_7() {
  Check c;
  Timer timer;
  auto inst = fts_reference_instance(20);
  auto saddle = fts_saddle(inst);
  auto set = fts_feasible_set(inst);
  Point x0 = fts_initial_point(inst);

  std::vector<std::pair<double, long>> rows;
  long n_at_half = 0;
  for (int k = 1; k <= 8; ++k) {
    double eps = 1.0 / (2.0 * k);
    EquilibriumModel model = saddle.base;
    model.delta = 0.5 * eps;  // inexactness budget matched to the target accuracy
    SolverConfig config;
    config.epsilon = eps;
    config.x0_override = x0;
    auto trace = run(model, set, euclidean_setup(), config);
    c.require(trace.stop_reason == StopReason::criterion_met,
              "eps " + format_double(eps) + " did not meet the stopping criterion");
    long n = static_cast<long>(trace.records.size());
    if (k == 1) n_at_half = n;
    rows.emplace_back(eps, n);
  }
  double p = scaling_exponent(rows);
  c.require(p >= 0.7 && p <= 1.4, "scaling exponent " + format_double(p) + " outside [0.7, 1.4]");
  double t = timer.seconds();
  c.require(t < 600.0, "runtime " + format_double(t) + "s >= 600s");
  if (c.ok)
    c.detail = "p = " + format_double(p) + ", N(1/2) = " + std::to_string(n_at_half) + ", " +
               format_double(t) + "s";
  return c;
}

// Closed-form equilibrium of the diagonal 2x2 game.
Check criterion_8() {
  Check c;
  Matrix m(2, 2);
  m.at(0, 0) = 2.0;
  m.at(1, 1) = 1.0;
  auto saddle = matrix_game(m);
  auto set = matrix_game_set(m);
  SolverConfig config;
  config.epsilon = 1e-4;
  auto trace = run(saddle.base, set, entropy_setup(), config);
  c.require(trace.stop_reason == StopReason::criterion_met, "run did not stop by criterion");
  Point expected{1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0};
  double dist = linf_dist(trace.ergodic_point, expected);
  c.require(dist <= 1e-2, "linf distance " + format_double(dist) + " > 1e-2");
  Point u = saddle.split_u(trace.ergodic_point), v = saddle.split_v(trace.ergodic_point);
  c.require(std::fabs(saddle.f(u, v) - 2.0 / 3.0) <= 1e-2, "value off 2/3");
  if (c.ok) c.detail = "linf distance " + format_double(dist);
  return c;
}

// Geometry and model property suites at 1e4 samples per property.
Check criterion_9() {
  Check c;
  const int samples = 10000;
  std::mt19937_64 rng(123);

  // Bregman properties under both setups.
  auto euclid = euclidean_setup();
  auto entropy = entropy_setup();
  auto ball = FeasibleSet::ball({0.0, 0.0, 0.0}, 1.5);
  auto smplx = FeasibleSet::simplex(4);
  for (int t = 0; t < samples; ++t) {
    Point x = ball.sample(rng), y = ball.sample(rng);
    c.require(bregman(euclid, x, x) == 0.0, "euclid V(x,x) != 0");
    double v = bregman(euclid, x, y);
    double half = 0.5 * std::pow(nrm2(sub(x, y)), 2);
    c.require(std::fabs(v - half) <= 1e-12 * (1.0 + half), "euclid V is not 1/2 ||x-y||^2");

    Point p = smplx.sample(rng), q = smplx.sample(rng);
    c.require(std::fabs(bregman(entropy, p, p)) <= 1e-13, "entropy V(x,x) != 0");
    c.require(bregman(entropy, p, q) + 1e-12 >= 0.5 * std::pow(nrm1(sub(p, q)), 2),
              "entropy strong convexity violated");
    if (!c.ok) break;
  }

  // Prox subproblem against the closed-form projection.
  {
    ConvexOracle phi;
    phi.value = [](const Point& x) { return 2.0 * x[0] + 0.5 * dot(x, x); };
    phi.subgrad = [](const Point& x) { return add(Point{2.0, 0.0, 0.0}, x); };
    auto res = solve_prox_subproblem(FeasibleSet::ball({0.0, 0.0, 0.0}, 1.0), euclid, phi, 1e-10);
    c.require(linf_dist(res.point, {-1.0, 0.0, 0.0}) <= 1e-6, "prox quadratic misses projection");
  }

  // Certificate soundness.
  for (int t = 0; t < samples; ++t) {
    Point cvec(4);
    for (auto& v : cvec) v = normal01(rng);
    Point center = smplx.sample(rng);
    auto res = linear_bregman_step(smplx, euclid, cvec, nullptr, 1.0, center, 0.0);
    Point grad = cvec;
    axpy(1.0, res.point, grad);
    axpy(-1.0, center, grad);
    double recheck = optimality_gap(smplx, grad, res.point);
    c.require(recheck <= res.certificate.achieved_tolerance + 1e-12, "certificate unsound");
    if (!c.ok) break;
  }

  // Model properties.
  auto vi = make_affine_vi(4, 3131);
  auto set4 = FeasibleSet::ball(Point(4, 0.0), 1.0);
  c.require(check_monotonicity(vi.model, set4, samples, 77) <= 1e-12, "VI monotonicity violated");

  Matrix m(3, 2);
  std::mt19937_64 mrng(5);
  for (auto& v : m.data) v = uniform(mrng, -1.0, 1.0);
  auto saddle = matrix_game(m);
  auto prod = matrix_game_set(m);
  for (int t = 0; t < samples; ++t) {
    Point x = prod.sample(rng), y = prod.sample(rng);
    double lhs = saddle.f(saddle.split_u(y), saddle.split_v(x)) -
                 saddle.f(saddle.split_u(x), saddle.split_v(y));
    c.require(lhs <= -saddle.base.psi(x, y) + 1e-10, "saddle model inequality violated");
    c.require(saddle.base.psi(x, x) == 0.0, "psi(x,x) != 0");
    if (!c.ok) break;
  }

  ConvexOracle zero;
  zero.value = [](const Point&) { return 0.0; };
  zero.subgrad = [](const Point& x) { return Point(x.size(), 0.0); };
  auto plain = vi_model(4, vi.model.operator_field);
  auto mixed = mixed_vi_model(4, vi.model.operator_field, zero);
  for (int t = 0; t < samples; ++t) {
    Point x = set4.sample(rng), y = set4.sample(rng);
    c.require(plain.psi(x, y) == mixed.psi(x, y), "mixed VI with h = 0 disagrees with plain VI");
    if (!c.ok) break;
  }

  if (c.ok) c.detail = "all properties at 1e4 samples";
  return c;
}

// Corrected vs literal acceptance condition on affine VIs, with a report.
Check criterion_10(const std::filesystem::path& out_dir) {
  Check c;
  std::ostringstream report;
  report << "Acceptance-condition comparison: corrected vs literal variant\n"
         << "=============================================================\n\n"
         << "The corrected variant keeps the L V(x_new, y_new) term on the right-hand\n"
         << "side of the per-iteration acceptance test; the literal variant evaluates\n"
         << "that Bregman term at (y_new, y_new), where it vanishes, and is therefore\n"
         << "strictly harder to satisfy. Both are run on the same affine VI instances;\n"
         << "only the corrected variant's certificate is asserted.\n\n"
         << "instance\tvariant\titerations\tprox_calls\tmax_L\tcertified_bound\texact_gap\n";

  for (int i = 0; i < 3; ++i) {
    auto vi = make_affine_vi(8, 2600 + i);
    auto set = FeasibleSet::ball(Point(8, 0.0), 1.0);
    for (bool literal : {false, true}) {
      SolverConfig config;
      config.epsilon = 1e-3;
      config.literal_condition = literal;
      auto trace = run(vi.model, set, euclidean_setup(), config);
      c.require(trace.stop_reason == StopReason::criterion_met,
                std::string(literal ? "literal" : "corrected") + " variant did not terminate on instance " +
                    std::to_string(i));
      double bound = theoretical_bound(trace, vi.model, config);
      auto gap = vi_dual_gap(vi.op, set, trace.ergodic_point);
      if (!literal) {
        c.require(gap.measured_gap <= bound + 1e-9,
                  "corrected bound violated on instance " + std::to_string(i));
        c.require(bound <= config.epsilon + 1e-12, "corrected bound exceeds epsilon");
      }
      report << i << "\t" << (literal ? "literal" : "corrected") << "\t" << trace.records.size()
             << "\t" << trace.total_prox_calls << "\t" << format_double(trace.max_accepted_L)
             << "\t" << format_double(bound) << "\t" << format_double(gap.measured_gap) << "\n";
    }
  }

  auto path = out_dir / "condition_comparison.txt";
  std::ofstream out(path);
  out << report.str();
  out.close();
  c.require(static_cast<bool>(std::ifstream(path)), "report not written");
  if (c.ok) c.detail = "report at " + path.string();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path out_dir = argc > 1 ? argv[1] : ".";
  std::filesystem::create_directories(out_dir);

  std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"certified accuracy on random monotone VIs", criterion_1},
      {"exact saddle gap on random matrix games", criterion_2},
      {"iteration bound with known constant", criterion_3},
      {"prox-call budget", criterion_4},
      {"adaptive constant ceiling", criterion_5},
      {"error non-accumulation under injected noise", criterion_6},
      {"distance-sum problem scaling sweep", criterion_7},
      {"closed-form 2x2 game equilibrium", criterion_8},
      {"geometry and model property suites", criterion_9},
      {"corrected vs literal acceptance condition", [&] { return criterion_10(out_dir); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c = criteria[i].second();
    const char* tag = c.ok ? "[PASS]" : "[FAIL]";
    std::cout << tag << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n" << std::flush;
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
