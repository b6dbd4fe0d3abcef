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

#include <functional>
#include <optional>
#include <utility>

#include "proxeq/vec.hpp"

namespace proxeq {

/// A norm together with a 1-strongly-convex (w.r.t. that norm) prox function d
/// and its gradient. Induces the Bregman divergence V(x,y).
struct ProxSetup {
  enum class Kind { euclidean, entropy };
  Kind kind = Kind::euclidean;
  std::function<double(const Point&)> norm;
  std::function<double(const Point&)> d;
  std::function<Point(const Point&)> grad_d;
};

/// d(x) = 1/2 ||x||_2^2. V(x,y) = 1/2 ||x-y||_2^2.
ProxSetup euclidean_setup();

/// Negative entropy d(x) = sum x_i ln x_i over a simplex (or a product of
/// simplices, where d splits blockwise). V is the Kullback-Leibler divergence.
ProxSetup entropy_setup();

/// V(x,y) = d(x) - d(y) - <grad d(y), x - y>.
double bregman(const ProxSetup& setup, const Point& x, const Point& y);

/// Convex compact feasible set with closed-form linear maximization and
/// Euclidean projection. Built-in variants: ball, box, simplex, product.
class FeasibleSet {
 public:
  enum class Kind { ball, box, simplex, product };

  static FeasibleSet ball(Point center, double radius);
  static FeasibleSet box(Point lo, Point hi);
  static FeasibleSet simplex(std::size_t n);
  static FeasibleSet product(std::vector<FeasibleSet> parts);

  Kind kind() const { return kind_; }
  std::size_t dimension() const { return dim_; }

  bool contains(const Point& x, double tol = 1e-9) const;

  /// Euclidean projection onto the set (closed-form per variant).
  Point project(const Point& x) const;

  /// argmin_{x in Q} d(x) for the given setup.
  Point prox_center(const ProxSetup& setup) const;

  /// Upper bound on max_{x in Q} V(x, x0).
  double max_bregman_to(const ProxSetup& setup, const Point& x0) const;

  /// argmax / max of <c, x> over the set.
  std::pair<Point, double> linear_max(const Point& c) const;

  /// A feasible sample (uniform-ish), portable across platforms.
  Point sample(std::mt19937_64& rng) const;

  /// Extreme points where enumerable (box up to 2^20 corners, simplex,
  /// products of those). Empty for balls.
  std::vector<Point> vertices() const;

  /// Offsets/lengths of simplex blocks when the set is a simplex or a product
  /// of simplices; empty otherwise. Drives entropy-setup closed forms.
  std::vector<std::pair<std::size_t, std::size_t>> simplex_blocks() const;

  const std::vector<FeasibleSet>& parts() const { return parts_; }
  const Point& ball_center() const { return center_; }
  double ball_radius() const { return radius_; }
  const Point& box_lo() const { return lo_; }
  const Point& box_hi() const { return hi_; }

 private:
  FeasibleSet() = default;
  Kind kind_ = Kind::ball;
  std::size_t dim_ = 0;
  Point center_;
  double radius_ = 0.0;
  Point lo_, hi_;
  std::vector<FeasibleSet> parts_;
};

std::pair<Point, double> linear_max(const FeasibleSet& set, const Point& c);

/// Proof object for an inexact prox-subproblem solution: the attained value of
/// max_{y in Q} <grad phi(x), x - y>, compared against the requested tolerance.
struct ProxCertificate {
  double achieved_tolerance = 0.0;
  double requested_tolerance = 0.0;
  bool satisfied = false;  // achieved <= requested + machine slack
};

struct ConvexOracle {
  std::function<double(const Point&)> value;
  std::function<Point(const Point&)> subgrad;
};

struct ProxSolveOptions {
  long max_iterations = 50000;
  double initial_step = 0.0;  // 0 = choose automatically
  const Point* start = nullptr;
};

struct ProxResult {
  Point point;
  ProxCertificate certificate;
  long iterations = 0;
};

/// max_{y in Q} <g, x - y>, the computable first-order optimality residual.
double optimality_gap(const FeasibleSet& set, const Point& grad, const Point& x);

/// Inexact argmin of a convex phi over the set: returns x with
/// max_{y in Q} <grad phi(x), x - y> <= delta_tilde when it converges; the
/// certificate always reports the best attained residual. Mirror-descent inner
/// loop with adaptive step, terminated by the certificate itself.
ProxResult solve_prox_subproblem(const FeasibleSet& set, const ProxSetup& setup,
                                 const ConvexOracle& phi, double delta_tilde,
                                 const ProxSolveOptions& opts = {});

/// Structured subproblem min_x <c, x> [+ composite(x)] + scale * V(x, center).
/// Dispatches to a closed form (Euclidean projection; entropy multiplicative
/// update) whenever the composite part is absent.
ProxResult linear_bregman_step(const FeasibleSet& set, const ProxSetup& setup, const Point& c,
                               const ConvexOracle* composite, double scale, const Point& center,
                               double delta_tilde, const ProxSolveOptions& opts = {});

}  // namespace proxeq
