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

#include <cstdint>
#include <functional>
#include <optional>

#include "proxeq/geometry.hpp"

namespace proxeq {

using OperatorField = std::function<Point(const Point&)>;

/// The central abstraction: a bifunction psi(x, y), convex in x with
/// psi(x,x) = 0, abstractly monotone (psi(x,y) + psi(y,x) <= 0), together with
/// its declared inexactness delta. The solver consumes psi through value and
/// subgradient-in-x oracles only.
struct EquilibriumModel {
  std::size_t dim = 0;
  double delta = 0.0;
  std::function<double(const Point& x, const Point& y)> psi;
  std::function<Point(const Point& x, const Point& y)> psi_subgrad_x;

  // Structure hints (may be empty). When operator_field is set,
  // psi(x,y) = <operator_field(y), x-y> [+ composite(x) - composite(y)],
  // which unlocks closed-form prox steps.
  OperatorField operator_field;
  std::optional<ConvexOracle> composite;
};

/// Saddle objective f(u,v), convex in u, concave in v, paired with a model of
/// the induced equilibrium problem over Q1 x Q2 satisfying
/// f(u_y, v_x) - f(u_x, v_y) <= -psi(x, y).
struct SaddleModel {
  EquilibriumModel base;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::function<double(const Point& u, const Point& v)> f;
  std::function<Point(const Point& u, const Point& v)> f_subgrad_u;  // of f(., v)
  std::function<Point(const Point& u, const Point& v)> f_subgrad_v;  // of f(u, .) (supergradient)
  std::optional<FeasibleSet> q1;
  std::optional<FeasibleSet> q2;
  std::optional<Matrix> bilinear;  // set when f(u,v) = u' M v (+ composites)

  Point split_u(const Point& x) const { return slice(x, 0, n1); }
  Point split_v(const Point& x) const { return slice(x, n1, n2); }
};

/// psi(x,y) = <g(y), x - y>: the plain variational inequality model.
EquilibriumModel vi_model(std::size_t dim, OperatorField g, double delta = 0.0);

/// psi(x,y) = <g(y), x - y> + h(x) - h(y): mixed variational inequality.
EquilibriumModel mixed_vi_model(std::size_t dim, OperatorField g, ConvexOracle h,
                                double delta = 0.0);

/// Composite saddle f(u,v) = f_tilde(u,v) + h(u) - phi(v) with
/// psi(x,y) = <g_tilde(y), x-y> + h(u_x) + phi(v_x) - h(u_y) - phi(v_y),
/// g_tilde = (d/du f_tilde, -d/dv f_tilde).
struct PartialSubgradOracle {
  std::function<double(const Point& u, const Point& v)> value;
  std::function<Point(const Point& u, const Point& v)> subgrad_u;
  std::function<Point(const Point& u, const Point& v)> subgrad_v;
};
SaddleModel composite_saddle_model(PartialSubgradOracle f_tilde, ConvexOracle h, ConvexOracle phi,
                                   FeasibleSet q1, FeasibleSet q2, double delta = 0.0);

/// Lagrangian saddle for min f(x) s.t. constraints_p(x) <= 0 over a joint set
/// coupling (x, lambda): a VI model of the stacked monotone operator
/// (subgrad f(x) + sum lambda_p subgrad c_p(x); -c_1(x), ..., -c_m(x)).
struct ConstraintOracle {
  std::function<std::vector<double>(const Point& x)> values;
  std::function<std::vector<Point>(const Point& x)> subgrads;
  std::size_t count = 0;
};
SaddleModel lagrangian_saddle_model(std::size_t n, ConvexOracle objective,
                                    ConstraintOracle constraints, double delta = 0.0);

/// Diagnostic: max over sampled feasible pairs of psi(x,y) + psi(y,x).
double check_monotonicity(const EquilibriumModel& model, const FeasibleSet& set, int trials,
                          std::uint64_t seed);

/// Wraps a model, adding deterministic bounded noise (|noise| <= amplitude,
/// zero on the diagonal) to psi values. The declared delta grows by
/// 3 * amplitude by default so the smoothness inequality stays honest.
EquilibriumModel with_injected_noise(EquilibriumModel base, double amplitude, std::uint64_t seed,
                                     std::optional<double> declared_delta = std::nullopt);

}  // namespace proxeq
