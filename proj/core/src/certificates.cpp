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

#include "proxeq/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace proxeq {

std::string to_string(GapMethod m) {
  switch (m) {
    case GapMethod::exact: return "exact";
    case GapMethod::inner_solve: return "inner_solve";
    case GapMethod::probe_sample: return "probe_sample";
  }
  return "?";
}

GapReport vi_dual_gap(const AffineOperator& g, const FeasibleSet& set, const Point& y_tilde,
                      double tol, long max_iterations) {
  if (!set.contains(y_tilde)) throw std::invalid_argument("y_tilde is not feasible");
  // Maximize theta(x) = <A x + b, y_tilde - x>, concave when A is monotone.
  auto grad = [&](const Point& x) {
    Point d = sub(y_tilde, x);
    Point gr = g.a.apply_transposed(d);
    axpy(-1.0, g(x), gr);
    return gr;
  };
  auto value = [&](const Point& x) { return dot(g(x), sub(y_tilde, x)); };

  double lip = 2.0 * spectral_norm(g.a) + 1e-12;
  Point x = y_tilde;
  double fx = value(x);
  double best_value = fx;
  double best_gap = std::numeric_limits<double>::infinity();
  double step = 1.0 / lip;
  long it = 0;
  for (; it < max_iterations; ++it) {
    Point gr = grad(x);
    double gap = optimality_gap(set, negated(gr), x);  // residual of the max problem
    if (fx + gap < best_value + best_gap || best_gap == std::numeric_limits<double>::infinity()) {
      best_value = fx;
      best_gap = std::max(gap, 0.0);
    }
    if (gap <= tol) break;
    Point cand = x;
    axpy(step, gr, cand);
    cand = set.project(cand);
    double fc = value(cand);
    if (fc >= fx - 1e-16 * (std::fabs(fx) + 1.0)) {
      x = std::move(cand);
      fx = fc;
      step *= 1.05;
    } else {
      step *= 0.5;
      if (step < 1e-18) break;
    }
  }

  GapReport rep;
  rep.measured_gap = best_value + best_gap;  // certified upper bound on the sup
  rep.method = GapMethod::exact;
  rep.inner_tolerance = tol;
  rep.certified = best_gap <= tol;
  return rep;
}

GapReport vi_dual_gap(const OperatorField& g, const FeasibleSet& set, const Point& y_tilde,
                      long probe_count, std::uint64_t seed) {
  if (!set.contains(y_tilde)) throw std::invalid_argument("y_tilde is not feasible");
  auto probes = make_probes(set, probe_count, seed);
  double best = 0.0;  // x = y_tilde contributes 0
  for (const auto& x : probes) best = std::max(best, dot(g(x), sub(y_tilde, x)));
  GapReport rep;
  rep.measured_gap = best;
  rep.method = GapMethod::probe_sample;
  rep.probe_count = static_cast<long>(probes.size());
  rep.certified = false;
  return rep;
}

std::vector<Point> make_probes(const FeasibleSet& set, long count, std::uint64_t seed,
                               bool include_vertices) {
  std::vector<Point> probes;
  if (include_vertices) {
    try {
      probes = set.vertices();
    } catch (const std::invalid_argument&) {
      // too many vertices; random probes only
    }
  }
  std::mt19937_64 rng(seed);
  probes.reserve(probes.size() + static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) probes.push_back(set.sample(rng));
  return probes;
}

GapReport equilibrium_residual(const EquilibriumModel& model, const FeasibleSet& set,
                               const Point& y_tilde, const std::vector<Point>& probes) {
  if (probes.empty()) throw std::invalid_argument("equilibrium_residual needs probes");
  if (!set.contains(y_tilde)) throw std::invalid_argument("y_tilde is not feasible");
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& x : probes) worst = std::max(worst, model.psi(y_tilde, x));
  GapReport rep;
  rep.measured_gap = worst;
  rep.method = GapMethod::probe_sample;
  rep.probe_count = static_cast<long>(probes.size());
  rep.certified = false;
  return rep;
}

namespace {

// Certified convex minimization of `obj` over `set`, seeded at `start`; the
// returned value never exceeds obj(start).
std::pair<double, double> inner_minimize(const FeasibleSet& set, const ConvexOracle& obj,
                                         const Point& start, double tol) {
  ProxSolveOptions opts;
  opts.max_iterations = 200000;
  opts.start = &start;
  ProxResult r = solve_prox_subproblem(set, euclidean_setup(), obj, tol, opts);
  double v = obj.value(r.point);
  double v0 = obj.value(start);
  return {std::min(v, v0), r.certificate.achieved_tolerance};
}

}  // namespace

GapReport saddle_gap(const SaddleModel& saddle, const Point& u_tilde, const Point& v_tilde,
                     GapMethod strategy, double inner_tol) {
  if (!saddle.q1 || !saddle.q2)
    throw std::invalid_argument("saddle_gap needs factor sets Q1 and Q2");
  if (!saddle.q1->contains(u_tilde) || !saddle.q2->contains(v_tilde))
    throw std::invalid_argument("(u_tilde, v_tilde) not in Q1 x Q2");

  GapReport rep;
  if (strategy == GapMethod::exact) {
    if (!saddle.bilinear || saddle.q1->kind() != FeasibleSet::Kind::simplex ||
        saddle.q2->kind() != FeasibleSet::Kind::simplex)
      throw std::invalid_argument("exact saddle gap needs a bilinear-on-simplex model");
    const Matrix& m = *saddle.bilinear;
    Point ut_m = m.apply_transposed(u_tilde);  // payoffs per column
    Point m_vt = m.apply(v_tilde);             // payoffs per row
    double max_v = *std::max_element(ut_m.begin(), ut_m.end());
    double min_u = *std::min_element(m_vt.begin(), m_vt.end());
    rep.measured_gap = max_v - min_u;
    rep.method = GapMethod::exact;
    rep.certified = true;
    return rep;
  }
  if (strategy == GapMethod::inner_solve) {
    if (!saddle.f_subgrad_u || !saddle.f_subgrad_v)
      throw std::invalid_argument("inner_solve saddle gap needs partial subgradient oracles");
    // max_v f(u_tilde, v) == -min_v -f(u_tilde, v)
    ConvexOracle neg_f_v;
    neg_f_v.value = [&](const Point& v) { return -saddle.f(u_tilde, v); };
    neg_f_v.subgrad = [&](const Point& v) { return negated(saddle.f_subgrad_v(u_tilde, v)); };
    auto [neg_max, res_v] = inner_minimize(*saddle.q2, neg_f_v, v_tilde, inner_tol);
    ConvexOracle f_u;
    f_u.value = [&](const Point& u) { return saddle.f(u, v_tilde); };
    f_u.subgrad = [&](const Point& u) { return saddle.f_subgrad_u(u, v_tilde); };
    auto [min_u, res_u] = inner_minimize(*saddle.q1, f_u, u_tilde, inner_tol);
    rep.measured_gap = -neg_max - min_u;
    rep.method = GapMethod::inner_solve;
    rep.inner_tolerance = std::max(res_v, res_u);
    rep.certified = rep.inner_tolerance <= inner_tol;
    return rep;
  }
  // probe_sample: vertices plus random probes of each factor.
  auto pv = make_probes(*saddle.q2, 256, 17);
  double max_v = -std::numeric_limits<double>::infinity();
  for (const auto& v : pv) max_v = std::max(max_v, saddle.f(u_tilde, v));
  auto pu = make_probes(*saddle.q1, 256, 23);
  double min_u = std::numeric_limits<double>::infinity();
  for (const auto& u : pu) min_u = std::min(min_u, saddle.f(u, v_tilde));
  max_v = std::max(max_v, saddle.f(u_tilde, v_tilde));
  min_u = std::min(min_u, saddle.f(u_tilde, v_tilde));
  rep.measured_gap = max_v - min_u;
  rep.method = GapMethod::probe_sample;
  rep.probe_count = static_cast<long>(pv.size() + pu.size());
  rep.certified = false;
  return rep;
}

}  // namespace proxeq
