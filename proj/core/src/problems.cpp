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

#include "proxeq/problems.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace proxeq {

namespace {

const double kReferenceAnchors[5][10] = {
    {5, 4, -7, -2, -3, -8, 5, 3, 8, 4},
    {-7, -8, -9, -8, -8, 6, -4, -8, 4, -3},
    {-4, -5, 8, 9, -5, -4, -9, -10, 1, 9},
    {7, -8, 7, -8, -5, 5, 3, -8, -8, -6},
    {1, 9, -10, -4, -8, -5, -1, -2, 1, 8},
};

}  // namespace

FTSInstance fts_reference_instance(std::uint64_t seed) {
  FTSInstance inst;
  inst.n = 10;
  inst.m = 100;
  inst.seed = seed;
  inst.anchors.reserve(5);
  for (const auto& row : kReferenceAnchors) inst.anchors.emplace_back(row, row + 10);
  inst.alpha = Matrix(inst.m, inst.n, 1.0);
  std::mt19937_64 rng(seed);
  for (std::size_t p = 0; p < inst.m; ++p) {
    auto pos = static_cast<std::size_t>(rng() % inst.n);
    double w = 1.0;
    while (w <= 1.0 || w >= 10.0) w = uniform(rng, 1.0, 10.0);  // open interval
    inst.alpha.at(p, pos) = w;
  }
  return inst;
}

std::pair<double, Point> fts_objective(const FTSInstance& inst, const Point& x) {
  if (x.size() != inst.n) throw std::invalid_argument("fts_objective dimension mismatch");
  double value = 0.0;
  Point grad(inst.n, 0.0);
  for (const auto& a : inst.anchors) {
    Point diff = sub(x, a);
    double d = nrm2(diff);
    value += d;
    if (d > 0.0) axpy(1.0 / d, diff, grad);  // zero contribution at the kink x = a
  }
  return {value, grad};
}

std::pair<std::vector<double>, std::vector<Point>> fts_constraints(const FTSInstance& inst,
                                                                   const Point& x) {
  if (x.size() != inst.n) throw std::invalid_argument("fts_constraints dimension mismatch");
  std::vector<double> values(inst.m);
  std::vector<Point> subgrads(inst.m, Point(inst.n, 0.0));
  for (std::size_t p = 0; p < inst.m; ++p) {
    double v = -1.0;
    for (std::size_t i = 0; i < inst.n; ++i) {
      v += inst.alpha.at(p, i) * std::fabs(x[i]);
      double s = x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
      subgrads[p][i] = inst.alpha.at(p, i) * s;
    }
    values[p] = v;
  }
  return {values, subgrads};
}

FeasibleSet fts_feasible_set(const FTSInstance& inst) {
  return FeasibleSet::ball(Point(inst.n + inst.m, 0.0), 1.0);
}

Point fts_initial_point(const FTSInstance& inst) {
  std::size_t d = inst.n + inst.m;
  return Point(d, 1.0 / std::sqrt(static_cast<double>(d)));
}

SaddleModel fts_saddle(const FTSInstance& inst) {
  ConvexOracle obj;
  obj.value = [inst](const Point& x) { return fts_objective(inst, x).first; };
  obj.subgrad = [inst](const Point& x) { return fts_objective(inst, x).second; };
  ConstraintOracle cons;
  cons.count = inst.m;
  cons.values = [inst](const Point& x) { return fts_constraints(inst, x).first; };
  cons.subgrads = [inst](const Point& x) { return fts_constraints(inst, x).second; };
  SaddleModel s = lagrangian_saddle_model(inst.n, obj, cons);
  return s;
}

void save_instance(const FTSInstance& inst, const std::filesystem::path& path) {
  nlohmann::json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["seed"] = inst.seed;
  j["anchors"] = inst.anchors;
  j["alpha"] = inst.alpha.data;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open instance file for writing: " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("failed writing instance file: " + path.string());
}

FTSInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path.string());
  nlohmann::json j = nlohmann::json::parse(in);
  FTSInstance inst;
  inst.n = j.at("n").get<std::size_t>();
  inst.m = j.at("m").get<std::size_t>();
  inst.seed = j.at("seed").get<std::uint64_t>();
  inst.anchors = j.at("anchors").get<std::vector<Point>>();
  inst.alpha = Matrix(inst.m, inst.n);
  inst.alpha.data = j.at("alpha").get<std::vector<double>>();
  if (inst.alpha.data.size() != inst.m * inst.n)
    throw std::runtime_error("alpha size mismatch in instance file");
  return inst;
}

SaddleModel matrix_game(const Matrix& m, double delta) {
  if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("empty payoff matrix");
  for (double v : m.data)
    if (!std::isfinite(v)) throw std::invalid_argument("payoff matrix must be finite");
  PartialSubgradOracle f_tilde;
  f_tilde.value = [m](const Point& u, const Point& v) { return dot(u, m.apply(v)); };
  f_tilde.subgrad_u = [m](const Point&, const Point& v) { return m.apply(v); };
  f_tilde.subgrad_v = [m](const Point& u, const Point&) { return m.apply_transposed(u); };
  ConvexOracle zero;
  zero.value = [](const Point&) { return 0.0; };
  zero.subgrad = [](const Point& x) { return Point(x.size(), 0.0); };
  SaddleModel s = composite_saddle_model(f_tilde, zero, zero, FeasibleSet::simplex(m.rows),
                                         FeasibleSet::simplex(m.cols), delta);
  // With zero composites the base model is a plain VI; drop the composite hint
  // so prox steps stay closed-form.
  s.base = vi_model(m.rows + m.cols, s.base.operator_field, delta);
  s.bilinear = m;
  return s;
}

FeasibleSet matrix_game_set(const Matrix& m) {
  std::vector<FeasibleSet> parts;
  parts.push_back(FeasibleSet::simplex(m.rows));
  parts.push_back(FeasibleSet::simplex(m.cols));
  return FeasibleSet::product(std::move(parts));
}

HolderVI holder_vi(double nu, double scale, std::size_t dim, std::uint64_t seed) {
  if (nu < 0.0 || nu > 1.0) throw std::invalid_argument("nu must lie in [0,1]");
  if (scale <= 0.0) throw std::invalid_argument("scale must be positive");
  HolderVI h;
  h.nu = nu;
  if (nu == 1.0) {
    // Affine: scaled rotation-like skew plus identity; exact Lipschitz constant.
    Matrix a(dim, dim, 0.0);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        double w = normal01(rng) / std::sqrt(static_cast<double>(dim));
        a.at(i, j) = w;
        a.at(j, i) = -w;
      }
    for (std::size_t i = 0; i < dim; ++i) a.at(i, i) = 1.0;
    for (auto& v : a.data) v *= scale;
    h.holder_constant = spectral_norm(a);
    h.model = vi_model(dim, [a](const Point& y) { return a.apply(y); });
    return h;
  }
  if (nu == 0.0) {
    // Subgradient field of scale * ||x||_1: bounded jumps, L0 = 2 scale sqrt(dim) in l2.
    h.holder_constant = 2.0 * scale * std::sqrt(static_cast<double>(dim));
    h.model = vi_model(dim, [scale](const Point& y) {
      Point g(y.size());
      for (std::size_t i = 0; i < y.size(); ++i)
        g[i] = y[i] > 0.0 ? scale : (y[i] < 0.0 ? -scale : 0.0);
      return g;
    });
    return h;
  }
  // Gradient of (scale / (1+nu)) * d/dx ... : g(x) = scale ||x||^{nu-1} x.
  h.holder_constant = scale * std::exp2(1.0 - nu);  // valid bound on any bounded set with r <= 1
  h.model = vi_model(dim, [scale, nu](const Point& y) {
    double r = nrm2(y);
    if (r == 0.0) return Point(y.size(), 0.0);
    return scaled(y, scale * std::pow(r, nu - 1.0));
  });
  return h;
}

AffineVI make_affine_vi(std::size_t dim, std::uint64_t seed, double mu, double skew_scale) {
  std::mt19937_64 rng(seed);
  Matrix a(dim, dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      double w = skew_scale * normal01(rng) / std::sqrt(static_cast<double>(dim));
      a.at(i, j) = w;
      a.at(j, i) = -w;
    }
  for (std::size_t i = 0; i < dim; ++i) a.at(i, i) = mu;
  Point b(dim);
  for (auto& v : b) v = normal01(rng);

  AffineVI vi;
  vi.op = AffineOperator{a, b};
  vi.lipschitz = spectral_norm(a);
  AffineOperator op = vi.op;
  vi.model = vi_model(dim, [op](const Point& y) { return op(y); });
  return vi;
}

}  // namespace proxeq
