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

#include "proxeq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace proxeq {

ProxSetup euclidean_setup() {
  ProxSetup s;
  s.kind = ProxSetup::Kind::euclidean;
  s.norm = [](const Point& x) { return nrm2(x); };
  s.d = [](const Point& x) { return 0.5 * dot(x, x); };
  s.grad_d = [](const Point& x) { return x; };
  return s;
}

ProxSetup entropy_setup() {
  ProxSetup s;
  s.kind = ProxSetup::Kind::entropy;
  s.norm = [](const Point& x) { return nrm1(x); };
  s.d = [](const Point& x) {
    double v = 0.0;
    for (double c : x) {
      if (c < 0.0) throw std::domain_error("entropy prox function needs nonnegative coordinates");
      if (c > 0.0) v += c * std::log(c);
    }
    return v;
  };
  s.grad_d = [](const Point& x) {
    Point g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] <= 0.0) throw std::domain_error("entropy gradient needs strictly positive coordinates");
      g[i] = 1.0 + std::log(x[i]);
    }
    return g;
  };
  return s;
}

double bregman(const ProxSetup& setup, const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (setup.kind == ProxSetup::Kind::euclidean) {
    Point diff = sub(x, y);
    return 0.5 * dot(diff, diff);
  }
  double v = setup.d(x) - setup.d(y) - dot(setup.grad_d(y), sub(x, y));
  return std::max(v, 0.0);
}

// ---------------------------------------------------------------------------
// FeasibleSet

FeasibleSet FeasibleSet::ball(Point center, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("ball radius must be positive");
  FeasibleSet s;
  s.kind_ = Kind::ball;
  s.dim_ = center.size();
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

FeasibleSet FeasibleSet::box(Point lo, Point hi) {
  require_same_dim(lo, hi);
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("box lower bound exceeds upper bound");
  FeasibleSet s;
  s.kind_ = Kind::box;
  s.dim_ = lo.size();
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  return s;
}

FeasibleSet FeasibleSet::simplex(std::size_t n) {
  if (n < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  FeasibleSet s;
  s.kind_ = Kind::simplex;
  s.dim_ = n;
  return s;
}

FeasibleSet FeasibleSet::product(std::vector<FeasibleSet> parts) {
  if (parts.empty()) throw std::invalid_argument("product of zero sets");
  FeasibleSet s;
  s.kind_ = Kind::product;
  s.dim_ = 0;
  for (const auto& p : parts) s.dim_ += p.dimension();
  s.parts_ = std::move(parts);
  return s;
}

bool FeasibleSet::contains(const Point& x, double tol) const {
  if (x.size() != dim_) return false;
  switch (kind_) {
    case Kind::ball:
      return nrm2(sub(x, center_)) <= radius_ + tol;
    case Kind::box:
      for (std::size_t i = 0; i < dim_; ++i)
        if (x[i] < lo_[i] - tol || x[i] > hi_[i] + tol) return false;
      return true;
    case Kind::simplex: {
      double s = 0.0;
      for (double v : x) {
        if (v < -tol) return false;
        s += v;
      }
      return std::fabs(s - 1.0) <= tol;
    }
    case Kind::product: {
      std::size_t off = 0;
      for (const auto& p : parts_) {
        if (!p.contains(slice(x, off, p.dimension()), tol)) return false;
        off += p.dimension();
      }
      return true;
    }
  }
  return false;
}

namespace {

Point project_simplex(const Point& x) {
  // Sort-based projection onto { v >= 0, sum v = 1 }.
  const std::size_t n = x.size();
  Point u = x;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0;
  double theta = 0.0;
  std::size_t rho = 0;
  for (std::size_t i = 0; i < n; ++i) {
    css += u[i];
    double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) {
      rho = i + 1;
      theta = t;
    }
  }
  (void)rho;
  Point y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = std::max(x[i] - theta, 0.0);
  return y;
}

}  // namespace

Point FeasibleSet::project(const Point& x) const {
  if (x.size() != dim_) throw std::invalid_argument("projection dimension mismatch");
  switch (kind_) {
    case Kind::ball: {
      Point diff = sub(x, center_);
      double n = nrm2(diff);
      if (n <= radius_) return x;
      Point y = center_;
      axpy(radius_ / n, diff, y);
      return y;
    }
    case Kind::box: {
      Point y(dim_);
      for (std::size_t i = 0; i < dim_; ++i) y[i] = std::clamp(x[i], lo_[i], hi_[i]);
      return y;
    }
    case Kind::simplex:
      return project_simplex(x);
    case Kind::product: {
      Point y;
      y.reserve(dim_);
      std::size_t off = 0;
      for (const auto& p : parts_) {
        Point yp = p.project(slice(x, off, p.dimension()));
        y.insert(y.end(), yp.begin(), yp.end());
        off += p.dimension();
      }
      return y;
    }
  }
  throw std::logic_error("unreachable");
}

Point FeasibleSet::prox_center(const ProxSetup& setup) const {
  if (setup.kind == ProxSetup::Kind::entropy) {
    auto blocks = simplex_blocks();
    if (blocks.empty()) throw std::invalid_argument("entropy setup needs a simplex-structured set");
    Point c(dim_, 0.0);
    for (auto [off, len] : blocks)
      for (std::size_t i = 0; i < len; ++i) c[off + i] = 1.0 / static_cast<double>(len);
    return c;
  }
  return project(Point(dim_, 0.0));
}

double FeasibleSet::max_bregman_to(const ProxSetup& setup, const Point& x0) const {
  if (x0.size() != dim_) throw std::invalid_argument("x0 dimension mismatch");
  if (setup.kind == ProxSetup::Kind::entropy) {
    auto blocks = simplex_blocks();
    if (blocks.empty()) throw std::invalid_argument("entropy setup needs a simplex-structured set");
    // max over vertices of each block: KL(e_i, x0_block) = -ln x0_i.
    double total = 0.0;
    for (auto [off, len] : blocks) {
      double mn = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < len; ++i) mn = std::min(mn, x0[off + i]);
      if (mn <= 0.0) throw std::domain_error("entropy diameter needs interior x0");
      total += -std::log(mn);
    }
    return total;
  }
  switch (kind_) {
    case Kind::ball: {
      double r = radius_ + nrm2(sub(x0, center_));
      return 0.5 * r * r;
    }
    case Kind::box: {
      double s = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        double a = x0[i] - lo_[i];
        double b = hi_[i] - x0[i];
        s += std::max(a * a, b * b);
      }
      return 0.5 * s;
    }
    case Kind::simplex: {
      // max over vertices e_i of 1/2 ||e_i - x0||^2.
      double n2 = dot(x0, x0);
      double mn = *std::min_element(x0.begin(), x0.end());
      return 0.5 * (1.0 - 2.0 * mn + n2);
    }
    case Kind::product: {
      double s = 0.0;
      std::size_t off = 0;
      for (const auto& p : parts_) {
        s += p.max_bregman_to(setup, slice(x0, off, p.dimension()));
        off += p.dimension();
      }
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

std::pair<Point, double> FeasibleSet::linear_max(const Point& c) const {
  if (c.size() != dim_) throw std::invalid_argument("linear_max dimension mismatch");
  if (!all_finite(c)) throw std::invalid_argument("linear_max with non-finite coefficients");
  switch (kind_) {
    case Kind::ball: {
      double n = nrm2(c);
      if (n == 0.0) return {center_, dot(c, center_)};
      Point x = center_;
      axpy(radius_ / n, c, x);
      return {x, dot(c, x)};
    }
    case Kind::box: {
      Point x(dim_);
      for (std::size_t i = 0; i < dim_; ++i) x[i] = c[i] > 0.0 ? hi_[i] : lo_[i];
      return {x, dot(c, x)};
    }
    case Kind::simplex: {
      std::size_t best = 0;
      for (std::size_t i = 1; i < dim_; ++i)
        if (c[i] > c[best]) best = i;
      Point x(dim_, 0.0);
      x[best] = 1.0;
      return {x, c[best]};
    }
    case Kind::product: {
      Point x;
      x.reserve(dim_);
      double v = 0.0;
      std::size_t off = 0;
      for (const auto& p : parts_) {
        auto [xp, vp] = p.linear_max(slice(c, off, p.dimension()));
        x.insert(x.end(), xp.begin(), xp.end());
        v += vp;
        off += p.dimension();
      }
      return {x, v};
    }
  }
  throw std::logic_error("unreachable");
}

Point FeasibleSet::sample(std::mt19937_64& rng) const {
  switch (kind_) {
    case Kind::ball: {
      Point dir(dim_);
      for (auto& v : dir) v = normal01(rng);
      double n = nrm2(dir);
      if (n == 0.0) return center_;
      double r = radius_ * std::pow(uniform01(rng), 1.0 / static_cast<double>(dim_));
      Point x = center_;
      axpy(r / n, dir, x);
      return x;
    }
    case Kind::box: {
      Point x(dim_);
      for (std::size_t i = 0; i < dim_; ++i) x[i] = uniform(rng, lo_[i], hi_[i]);
      return x;
    }
    case Kind::simplex: {
      Point x(dim_);
      double s = 0.0;
      for (auto& v : x) {
        v = -std::log(std::max(uniform01(rng), 1e-300));
        s += v;
      }
      for (auto& v : x) v /= s;
      return x;
    }
    case Kind::product: {
      Point x;
      x.reserve(dim_);
      for (const auto& p : parts_) {
        Point xp = p.sample(rng);
        x.insert(x.end(), xp.begin(), xp.end());
      }
      return x;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Point> FeasibleSet::vertices() const {
  switch (kind_) {
    case Kind::ball:
      return {};
    case Kind::box: {
      if (dim_ > 20) throw std::invalid_argument("box vertex enumeration limited to 20 dims");
      std::vector<Point> vs;
      vs.reserve(std::size_t{1} << dim_);
      for (std::size_t mask = 0; mask < (std::size_t{1} << dim_); ++mask) {
        Point x(dim_);
        for (std::size_t i = 0; i < dim_; ++i) x[i] = (mask >> i) & 1 ? hi_[i] : lo_[i];
        vs.push_back(std::move(x));
      }
      return vs;
    }
    case Kind::simplex: {
      std::vector<Point> vs(dim_, Point(dim_, 0.0));
      for (std::size_t i = 0; i < dim_; ++i) vs[i][i] = 1.0;
      return vs;
    }
    case Kind::product: {
      std::vector<Point> acc = {Point{}};
      for (const auto& p : parts_) {
        auto vp = p.vertices();
        if (vp.empty()) return {};
        std::vector<Point> next;
        next.reserve(acc.size() * vp.size());
        if (acc.size() * vp.size() > 1u << 20)
          throw std::invalid_argument("product vertex enumeration too large");
        for (const auto& a : acc)
          for (const auto& b : vp) next.push_back(concat(a, b));
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

std::vector<std::pair<std::size_t, std::size_t>> FeasibleSet::simplex_blocks() const {
  if (kind_ == Kind::simplex) return {{0, dim_}};
  if (kind_ == Kind::product) {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t off = 0;
    for (const auto& p : parts_) {
      auto sub_blocks = p.simplex_blocks();
      if (sub_blocks.empty()) return {};
      for (auto [o, l] : sub_blocks) blocks.emplace_back(off + o, l);
      off += p.dimension();
    }
    return blocks;
  }
  return {};
}

std::pair<Point, double> linear_max(const FeasibleSet& set, const Point& c) {
  return set.linear_max(c);
}

// ---------------------------------------------------------------------------
// Prox subproblems

double optimality_gap(const FeasibleSet& set, const Point& grad, const Point& x) {
  auto [y, v] = set.linear_max(negated(grad));
  (void)y;
  return dot(grad, x) + v;
}

namespace {

// Multiplicative updates drive dominated coordinates toward zero geometrically;
// without a floor they underflow and the entropy gradient blows up.
constexpr double kEntropyFloor = 1e-280;

// Machine-precision slack: closed-form solutions certify at ~1e-16 scale, so
// a zero requested tolerance is still satisfiable.
double machine_slack(const Point& grad, const Point& x) {
  double scale = 0.0;
  for (std::size_t i = 0; i < grad.size(); ++i) scale += std::fabs(grad[i]) * (std::fabs(x[i]) + 1.0);
  return 64.0 * std::numeric_limits<double>::epsilon() * (scale + 1.0);
}

Point mirror_step(const FeasibleSet& set, const ProxSetup& setup, const Point& x, const Point& grad,
                  double step) {
  if (setup.kind == ProxSetup::Kind::euclidean) {
    Point y = x;
    axpy(-step, grad, y);
    return set.project(y);
  }
  // Entropy: blockwise multiplicative update.
  auto blocks = set.simplex_blocks();
  if (blocks.empty()) throw std::invalid_argument("entropy setup needs a simplex-structured set");
  Point y(x.size());
  for (auto [off, len] : blocks) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < len; ++i) mx = std::max(mx, -step * grad[off + i]);
    double z = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      y[off + i] = x[off + i] * std::exp(-step * grad[off + i] - mx);
      z += y[off + i];
    }
    for (std::size_t i = 0; i < len; ++i) y[off + i] = std::max(y[off + i] / z, kEntropyFloor);
  }
  return y;
}

}  // namespace

ProxResult solve_prox_subproblem(const FeasibleSet& set, const ProxSetup& setup,
                                 const ConvexOracle& phi, double delta_tilde,
                                 const ProxSolveOptions& opts) {
  if (delta_tilde < 0.0) throw std::invalid_argument("prox tolerance must be nonnegative");
  Point x = opts.start ? *opts.start : set.prox_center(setup);
  double fx = phi.value(x);
  double step = opts.initial_step > 0.0 ? opts.initial_step : 1.0;

  Point best_x = x;
  double best_gap = std::numeric_limits<double>::infinity();
  double best_slack = 0.0;
  long it = 0;
  for (; it < opts.max_iterations; ++it) {
    Point g = phi.subgrad(x);
    double gap = optimality_gap(set, g, x);
    if (gap < best_gap) {
      best_gap = gap;
      best_x = x;
      best_slack = machine_slack(g, x);
    }
    if (best_gap <= delta_tilde + best_slack) break;

    Point cand = mirror_step(set, setup, x, g, step);
    double fc = phi.value(cand);
    if (fc <= fx + 1e-14 * (std::fabs(fx) + 1.0)) {
      x = std::move(cand);
      fx = fc;
      step *= 1.25;
    } else {
      step *= 0.5;
      if (step < 1e-18) break;
    }
  }

  ProxResult res;
  res.point = std::move(best_x);
  res.certificate.achieved_tolerance = std::max(best_gap, 0.0);
  res.certificate.requested_tolerance = delta_tilde;
  res.certificate.satisfied = best_gap <= delta_tilde + best_slack;
  res.iterations = it;
  return res;
}

ProxResult linear_bregman_step(const FeasibleSet& set, const ProxSetup& setup, const Point& c,
                               const ConvexOracle* composite, double scale, const Point& center,
                               double delta_tilde, const ProxSolveOptions& opts) {
  if (scale <= 0.0) throw std::invalid_argument("bregman scale must be positive");
  if (composite == nullptr) {
    Point x;
    if (setup.kind == ProxSetup::Kind::euclidean) {
      Point target = center;
      axpy(-1.0 / scale, c, target);
      x = set.project(target);
    } else {
      auto blocks = set.simplex_blocks();
      if (blocks.empty()) throw std::invalid_argument("entropy setup needs a simplex-structured set");
      x.assign(c.size(), 0.0);
      for (auto [off, len] : blocks) {
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < len; ++i) mx = std::max(mx, -c[off + i] / scale);
        double z = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
          x[off + i] = center[off + i] * std::exp(-c[off + i] / scale - mx);
          z += x[off + i];
        }
        for (std::size_t i = 0; i < len; ++i) x[off + i] = std::max(x[off + i] / z, kEntropyFloor);
      }
    }
    Point grad = c;
    axpy(scale, setup.grad_d(x), grad);
    axpy(-scale, setup.grad_d(center), grad);
    double gap = optimality_gap(set, grad, x);
    ProxResult res;
    res.point = std::move(x);
    res.certificate.achieved_tolerance = std::max(gap, 0.0);
    res.certificate.requested_tolerance = delta_tilde;
    res.certificate.satisfied = gap <= delta_tilde + machine_slack(grad, res.point);
    res.iterations = 1;
    return res;
  }

  ConvexOracle phi;
  phi.value = [&set, &setup, c, composite, scale, center](const Point& x) {
    return dot(c, x) + composite->value(x) + scale * bregman(setup, x, center);
  };
  phi.subgrad = [&setup, c, composite, scale, center](const Point& x) {
    Point g = add(c, composite->subgrad(x));
    axpy(scale, setup.grad_d(x), g);
    axpy(-scale, setup.grad_d(center), g);
    return g;
  };
  ProxSolveOptions o = opts;
  if (o.initial_step <= 0.0) o.initial_step = 1.0 / scale;
  if (o.start == nullptr) o.start = &center;
  return solve_prox_subproblem(set, setup, phi, delta_tilde, o);
}

}  // namespace proxeq
