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

#include <filesystem>

#include "proxeq/certificates.hpp"
#include "proxeq/models.hpp"

namespace proxeq {

/// Fermat-Torricelli-Steiner instance: minimize the sum of distances to the
/// anchors subject to m weighted-l1 constraints, solved as a Lagrangian saddle
/// over the unit ball in R^{n+m}.
struct FTSInstance {
  std::size_t n = 10;
  std::size_t m = 100;
  std::vector<Point> anchors;
  Matrix alpha;  // m x n; one entry per row in (1,10), the rest exactly 1
  std::uint64_t seed = 0;
};

/// The reference instance: n=10, m=100, five fixed reference anchors, and
/// seeded random alpha weights.
FTSInstance fts_reference_instance(std::uint64_t seed = 20);

/// Sum of Euclidean distances to the anchors, with the zero subgradient
/// convention at anchor kinks.
std::pair<double, Point> fts_objective(const FTSInstance& inst, const Point& x);

/// Weighted-l1 constraint values and subgradients (sign convention: 0 at 0).
std::pair<std::vector<double>, std::vector<Point>> fts_constraints(const FTSInstance& inst,
                                                                   const Point& x);

/// Lagrangian saddle reformulation over the unit ball in R^{n+m}.
SaddleModel fts_saddle(const FTSInstance& inst);
FeasibleSet fts_feasible_set(const FTSInstance& inst);

/// The reference initial point (0.2,...,0.2)/||.|| in R^{n+m}.
Point fts_initial_point(const FTSInstance& inst);

void save_instance(const FTSInstance& inst, const std::filesystem::path& path);
FTSInstance load_instance(const std::filesystem::path& path);

/// Bilinear saddle u' M v over simplex x simplex (u minimizes, v maximizes).
SaddleModel matrix_game(const Matrix& m, double delta = 0.0);
FeasibleSet matrix_game_set(const Matrix& m);

/// Monotone operator with Holder exponent nu: nu=1 is affine with a known
/// Lipschitz constant, nu=0 a scaled sign field, in between the gradient of a
/// ||x||^{1+nu} potential.
struct HolderVI {
  EquilibriumModel model;
  double nu = 1.0;
  double holder_constant = 0.0;  // exact for nu=1, an upper bound otherwise
};
HolderVI holder_vi(double nu, double scale, std::size_t dim, std::uint64_t seed);

/// Random monotone affine VI g(x) = A x + b with sym(A) = mu I (positive
/// definite) plus a random skew part; lipschitz = ||A||_2.
struct AffineVI {
  AffineOperator op;
  double lipschitz = 0.0;
  EquilibriumModel model;
};
AffineVI make_affine_vi(std::size_t dim, std::uint64_t seed, double mu = 0.1, double skew_scale = 1.0);

}  // namespace proxeq
