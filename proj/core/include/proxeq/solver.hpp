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

#include "proxeq/models.hpp"

namespace proxeq {

struct SolverConfig {
  double epsilon = 1e-3;      // target accuracy
  double L0 = 1.0;            // initial smoothness constant guess
  double delta_tilde = 0.0;   // inexact-argmin tolerance per subproblem
  long max_outer_iterations = 1000000;
  std::optional<Point> x0_override;
  std::optional<double> diameter_override;  // needed if x0_override has no closed-form bound
  // Run the acceptance condition as printed (its second Bregman term is
  // V(y,y) = 0) instead of the corrected form; for erratum comparison only.
  bool literal_condition = false;
  // Keep iterating until S_N >= multiplier * D / epsilon; >1 over-runs the
  // stopping criterion (error non-accumulation experiments).
  double stop_multiplier = 1.0;
  long prox_max_iterations = 50000;
};

enum class StopReason { criterion_met, iteration_cap, l_overflow };

struct IterationRecord {
  long index = 0;
  double L = 0.0;            // accepted constant for this iteration
  Point x;                   // x^{k+1}
  Point y;                   // y^{k+1}
  int prox_calls = 0;        // individual subproblem solves (2 per attempt)
  int condition_checks = 0;  // attempts, i.e. 1 + number of doublings
  double S = 0.0;            // running sum of 1/L
  double worst_inner_residual = 0.0;
};

struct SolverTrace {
  std::vector<IterationRecord> records;
  double S_N = 0.0;
  Point ergodic_point;
  // Executions of the two-subproblem step; this is the auxiliary-problem count
  // the 2N + log2(L/L0) budget refers to.
  long total_prox_calls = 0;
  long total_subproblem_solves = 0;  // = 2 * total_prox_calls
  StopReason stop_reason = StopReason::iteration_cap;
  double diameter_bound = 0.0;
  Point x0;
  double max_accepted_L = 0.0;
  double epsilon = 0.0;
  double delta_tilde = 0.0;
};

/// Acceptance test for a trial constant: in corrected form,
///   psi(x_new, x_prev) <= psi(y_new, x_prev) + psi(x_new, y_new)
///                         + L V(x_new, y_new) + L V(y_new, x_prev) + delta.
/// The literal printed form replaces V(x_new, y_new) with V(y_new, y_new) = 0.
bool check_condition(const EquilibriumModel& model, const ProxSetup& setup, const Point& x_prev,
                     const Point& y_new, const Point& x_new, double L_trial, bool literal = false);

/// The adaptive proximal method: per outer iteration, halve the running L,
/// solve the y- and x-subproblems to tolerance delta_tilde, and double L until
/// the acceptance condition holds. Stops when S_N >= D / epsilon.
SolverTrace run(const EquilibriumModel& model, const FeasibleSet& set, const ProxSetup& setup,
                const SolverConfig& config);

/// (1/S_N)-weighted average of the y-iterates; the certified output point.
Point ergodic_point(const std::vector<IterationRecord>& records);

/// Certified upper bound on sup_x psi(y_ergodic, x): D / S_N + 2 delta_tilde + delta.
/// Certified only when the run stopped by criterion; still informative otherwise.
double theoretical_bound(const SolverTrace& trace, const EquilibriumModel& model,
                         const SolverConfig& config);

}  // namespace proxeq
