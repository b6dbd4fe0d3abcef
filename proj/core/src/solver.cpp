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

#include "proxeq/solver.hpp"

#include <cmath>
#include <limits>

namespace proxeq {

bool check_condition(const EquilibriumModel& model, const ProxSetup& setup, const Point& x_prev,
                     const Point& y_new, const Point& x_new, double L_trial, bool literal) {
  // Once the iterates coincide to machine precision both sides are zero in
  // exact arithmetic and cancellation noise in psi can flip the comparison;
  // accept the step instead of doubling L forever.
  double drift = nrm2(sub(x_new, y_new)) + nrm2(sub(y_new, x_prev));
  if (drift <= 1e-12 * (1.0 + nrm2(x_prev))) return true;
  double lhs = model.psi(x_new, x_prev);
  double rhs = model.psi(y_new, x_prev) + model.psi(x_new, y_new) +
               L_trial * bregman(setup, y_new, x_prev) + model.delta;
  if (!literal) rhs += L_trial * bregman(setup, x_new, y_new);
  return lhs <= rhs;
}

namespace {

// Solve argmin_x psi(x, anchor) + L V(x, center) to tolerance delta_tilde.
ProxResult model_prox_step(const EquilibriumModel& model, const FeasibleSet& set,
                           const ProxSetup& setup, const Point& anchor, const Point& center,
                           double L, double delta_tilde, long prox_cap) {
  ProxSolveOptions opts;
  opts.max_iterations = prox_cap;
  if (model.operator_field) {
    Point c = model.operator_field(anchor);
    const ConvexOracle* comp = model.composite ? &*model.composite : nullptr;
    return linear_bregman_step(set, setup, c, comp, L, center, delta_tilde, opts);
  }
  ConvexOracle phi;
  phi.value = [&](const Point& x) { return model.psi(x, anchor) + L * bregman(setup, x, center); };
  phi.subgrad = [&](const Point& x) {
    Point g = model.psi_subgrad_x(x, anchor);
    axpy(L, setup.grad_d(x), g);
    axpy(-L, setup.grad_d(center), g);
    return g;
  };
  opts.initial_step = 1.0 / L;
  opts.start = &center;
  return solve_prox_subproblem(set, setup, phi, delta_tilde, opts);
}

}  // namespace

SolverTrace run(const EquilibriumModel& model, const FeasibleSet& set, const ProxSetup& setup,
                const SolverConfig& config) {
  if (config.epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  if (config.L0 <= 0.0) throw std::invalid_argument("L0 must be positive");
  if (config.delta_tilde < 0.0) throw std::invalid_argument("delta_tilde must be nonnegative");
  if (config.max_outer_iterations < 1) throw std::invalid_argument("iteration cap must be >= 1");

  SolverTrace trace;
  trace.epsilon = config.epsilon;
  trace.delta_tilde = config.delta_tilde;

  Point x = config.x0_override ? *config.x0_override : set.prox_center(setup);
  if (!set.contains(x)) throw std::invalid_argument("x0 is not feasible");
  trace.x0 = x;
  trace.diameter_bound =
      config.diameter_override ? *config.diameter_override : set.max_bregman_to(setup, x);
  const double s_target =
      config.stop_multiplier * trace.diameter_bound / config.epsilon;
  const double l_ceiling = std::ldexp(config.L0, 60);

  double L_run = config.L0;
  Point ergodic_sum(set.dimension(), 0.0);

  for (long k = 0; k < config.max_outer_iterations; ++k) {
    L_run *= 0.5;
    IterationRecord rec;
    rec.index = k;
    Point y_new, x_new;
    while (true) {
      ProxResult ry =
          model_prox_step(model, set, setup, x, x, L_run, config.delta_tilde, config.prox_max_iterations);
      ProxResult rx = model_prox_step(model, set, setup, ry.point, x, L_run, config.delta_tilde,
                                      config.prox_max_iterations);
      rec.prox_calls += 2;
      rec.condition_checks += 1;
      rec.worst_inner_residual = std::max(
          {rec.worst_inner_residual, ry.certificate.achieved_tolerance, rx.certificate.achieved_tolerance});
      y_new = std::move(ry.point);
      x_new = std::move(rx.point);
      if (check_condition(model, setup, x, y_new, x_new, L_run, config.literal_condition)) break;
      L_run *= 2.0;
      if (L_run > l_ceiling) {
        trace.stop_reason = StopReason::l_overflow;
        trace.S_N = 0.0;
        for (const auto& r : trace.records) trace.S_N += 1.0 / r.L;
        if (!trace.records.empty()) trace.ergodic_point = ergodic_point(trace.records);
        return trace;
      }
    }

    rec.L = L_run;
    rec.x = x_new;
    rec.y = y_new;
    trace.S_N += 1.0 / L_run;
    rec.S = trace.S_N;
    trace.max_accepted_L = std::max(trace.max_accepted_L, L_run);
    trace.total_prox_calls += rec.condition_checks;
    trace.total_subproblem_solves += rec.prox_calls;
    axpy(1.0 / L_run, y_new, ergodic_sum);
    trace.records.push_back(std::move(rec));
    x = std::move(x_new);

    if (trace.S_N >= s_target) {
      trace.stop_reason = StopReason::criterion_met;
      break;
    }
  }

  trace.ergodic_point = scaled(ergodic_sum, 1.0 / trace.S_N);
  return trace;
}

Point ergodic_point(const std::vector<IterationRecord>& records) {
  if (records.empty()) throw std::invalid_argument("ergodic point needs at least one iteration");
  Point sum(records.front().y.size(), 0.0);
  double s = 0.0;
  for (const auto& r : records) {
    axpy(1.0 / r.L, r.y, sum);
    s += 1.0 / r.L;
  }
  return scaled(sum, 1.0 / s);
}

double theoretical_bound(const SolverTrace& trace, const EquilibriumModel& model,
                         const SolverConfig& config) {
  if (trace.S_N <= 0.0) return std::numeric_limits<double>::infinity();
  return trace.diameter_bound / trace.S_N + 2.0 * config.delta_tilde + model.delta;
}

}  // namespace proxeq
