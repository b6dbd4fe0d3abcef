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

#include "proxeq/models.hpp"

#include <cmath>
#include <limits>

namespace proxeq {

EquilibriumModel vi_model(std::size_t dim, OperatorField g, double delta) {
  if (delta < 0.0) throw std::invalid_argument("delta must be nonnegative");
  EquilibriumModel m;
  m.dim = dim;
  m.delta = delta;
  m.operator_field = g;
  m.psi = [g](const Point& x, const Point& y) { return dot(g(y), sub(x, y)); };
  m.psi_subgrad_x = [g](const Point&, const Point& y) { return g(y); };
  return m;
}

EquilibriumModel mixed_vi_model(std::size_t dim, OperatorField g, ConvexOracle h, double delta) {
  if (delta < 0.0) throw std::invalid_argument("delta must be nonnegative");
  EquilibriumModel m;
  m.dim = dim;
  m.delta = delta;
  m.operator_field = g;
  m.composite = h;
  m.psi = [g, h](const Point& x, const Point& y) {
    return dot(g(y), sub(x, y)) + h.value(x) - h.value(y);
  };
  m.psi_subgrad_x = [g, h](const Point& x, const Point& y) { return add(g(y), h.subgrad(x)); };
  return m;
}

SaddleModel composite_saddle_model(PartialSubgradOracle f_tilde, ConvexOracle h, ConvexOracle phi,
                                   FeasibleSet q1, FeasibleSet q2, double delta) {
  const std::size_t n1 = q1.dimension();
  const std::size_t n2 = q2.dimension();
  SaddleModel s;
  s.n1 = n1;
  s.n2 = n2;

  OperatorField g_tilde = [f_tilde, n1, n2](const Point& y) {
    Point u = slice(y, 0, n1);
    Point v = slice(y, n1, n2);
    return concat(f_tilde.subgrad_u(u, v), negated(f_tilde.subgrad_v(u, v)));
  };
  ConvexOracle comp;
  comp.value = [h, phi, n1, n2](const Point& x) {
    return h.value(slice(x, 0, n1)) + phi.value(slice(x, n1, n2));
  };
  comp.subgrad = [h, phi, n1, n2](const Point& x) {
    return concat(h.subgrad(slice(x, 0, n1)), phi.subgrad(slice(x, n1, n2)));
  };
  s.base = mixed_vi_model(n1 + n2, g_tilde, comp, delta);

  s.f = [f_tilde, h, phi](const Point& u, const Point& v) {
    return f_tilde.value(u, v) + h.value(u) - phi.value(v);
  };
  s.f_subgrad_u = [f_tilde, h](const Point& u, const Point& v) {
    return add(f_tilde.subgrad_u(u, v), h.subgrad(u));
  };
  s.f_subgrad_v = [f_tilde, phi](const Point& u, const Point& v) {
    return sub(f_tilde.subgrad_v(u, v), phi.subgrad(v));
  };
  s.q1 = std::move(q1);
  s.q2 = std::move(q2);
  return s;
}

SaddleModel lagrangian_saddle_model(std::size_t n, ConvexOracle objective,
                                    ConstraintOracle constraints, double delta) {
  const std::size_t m = constraints.count;
  SaddleModel s;
  s.n1 = n;
  s.n2 = m;

  OperatorField g = [objective, constraints, n, m](const Point& y) {
    Point x = slice(y, 0, n);
    Point lambda = slice(y, n, m);
    Point gx = objective.subgrad(x);
    if (m > 0) {
      auto subs = constraints.subgrads(x);
      for (std::size_t p = 0; p < m; ++p) axpy(lambda[p], subs[p], gx);
    }
    Point gl(m, 0.0);
    if (m > 0) {
      auto vals = constraints.values(x);
      // Primal-dual VI operator negates the lambda block of the Lagrangian
      // gradient (ascent direction in lambda).
      for (std::size_t p = 0; p < m; ++p) gl[p] = -vals[p];
    }
    return concat(gx, gl);
  };
  s.base = vi_model(n + m, g, delta);

  s.f = [objective, constraints, m](const Point& u, const Point& v) {
    double val = objective.value(u);
    if (m > 0) {
      auto c = constraints.values(u);
      for (std::size_t p = 0; p < m; ++p) val += v[p] * c[p];
    }
    return val;
  };
  s.f_subgrad_u = [objective, constraints, m](const Point& u, const Point& v) {
    Point g = objective.subgrad(u);
    if (m > 0) {
      auto subs = constraints.subgrads(u);
      for (std::size_t p = 0; p < m; ++p) axpy(v[p], subs[p], g);
    }
    return g;
  };
  s.f_subgrad_v = [constraints, m](const Point& u, const Point&) {
    if (m == 0) return Point{};
    auto c = constraints.values(u);
    return Point(c.begin(), c.end());
  };
  return s;
}

double check_monotonicity(const EquilibriumModel& model, const FeasibleSet& set, int trials,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    Point x = set.sample(rng);
    Point y = set.sample(rng);
    worst = std::max(worst, model.psi(x, y) + model.psi(y, x));
  }
  return worst;
}

EquilibriumModel with_injected_noise(EquilibriumModel base, double amplitude, std::uint64_t seed,
                                     std::optional<double> declared_delta) {
  if (amplitude < 0.0) throw std::invalid_argument("noise amplitude must be nonnegative");
  EquilibriumModel noisy = base;
  noisy.delta = declared_delta.value_or(base.delta + 3.0 * amplitude);
  auto clean_psi = base.psi;
  noisy.psi = [clean_psi, amplitude, seed](const Point& x, const Point& y) {
    double v = clean_psi(x, y);
    if (x == y) return v;  // keep psi(x,x) = 0 exact
    return v + amplitude * (2.0 * hash01(x, y, seed) - 1.0);
  };
  return noisy;
}

}  // namespace proxeq
