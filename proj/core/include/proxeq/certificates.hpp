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

#include <string>

#include "proxeq/models.hpp"

namespace proxeq {

enum class GapMethod { exact, inner_solve, probe_sample };

std::string to_string(GapMethod m);

/// Post-hoc quality measure. `exact` and `inner_solve` values are certified
/// upper estimates of the true sup; `probe_sample` is a lower bound.
struct GapReport {
  double measured_gap = 0.0;
  double certified_bound = std::numeric_limits<double>::quiet_NaN();  // caller-supplied context
  GapMethod method = GapMethod::probe_sample;
  long probe_count = 0;
  double inner_tolerance = 0.0;
  bool certified = false;
};

/// Affine operator g(x) = A x + b.
struct AffineOperator {
  Matrix a;
  Point b;
  Point operator()(const Point& x) const { return add(a.apply(x), b); }
};

/// Weak-VI dual gap sup_{x in Q} <g(x), y_tilde - x> for an affine monotone g,
/// solved as a smooth concave maximization certified to `tol`. The reported
/// value is an upper bound (attained value plus the remaining optimality gap).
GapReport vi_dual_gap(const AffineOperator& g, const FeasibleSet& set, const Point& y_tilde,
                      double tol = 1e-9, long max_iterations = 2000000);

/// Probe-sample estimate of the weak-VI dual gap: a lower bound on the sup.
GapReport vi_dual_gap(const OperatorField& g, const FeasibleSet& set, const Point& y_tilde,
                      long probe_count, std::uint64_t seed);

/// Random feasible probes, optionally prepended with the set's vertices.
std::vector<Point> make_probes(const FeasibleSet& set, long count, std::uint64_t seed,
                               bool include_vertices = true);

/// max over probes of psi(y_tilde, x): a lower bound on sup_x psi(y_tilde, x).
GapReport equilibrium_residual(const EquilibriumModel& model, const FeasibleSet& set,
                               const Point& y_tilde, const std::vector<Point>& probes);

/// Saddle duality gap max_v f(u_tilde, v) - min_u f(u, v_tilde).
/// `exact` demands a bilinear-on-simplex model (vertex enumeration);
/// `inner_solve` uses certified convex inner solves seeded at (u,v) so the
/// reported gap is nonnegative.
GapReport saddle_gap(const SaddleModel& saddle, const Point& u_tilde, const Point& v_tilde,
                     GapMethod strategy, double inner_tol = 1e-9);

}  // namespace proxeq
