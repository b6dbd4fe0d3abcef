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

#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>
#include <stdexcept>
#include <vector>

namespace proxeq {

/// Dense real vector; the iterate carrier for every problem instance.
using Point = std::vector<double>;

inline void require_same_dim(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
}

inline double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double nrm2(const Point& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

inline double nrm1(const Point& a) {
  double s = 0.0;
  for (double v : a) s += std::fabs(v);
  return s;
}

inline double linf_dist(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::fabs(a[i] - b[i]));
  return s;
}

inline Point sub(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Point add(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Point scaled(const Point& a, double s) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline void axpy(double alpha, const Point& x, Point& y) {
  require_same_dim(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline Point negated(const Point& a) { return scaled(a, -1.0); }

inline bool all_finite(const Point& a) {
  for (double v : a)
    if (!std::isfinite(v)) return false;
  return true;
}

inline Point concat(const Point& a, const Point& b) {
  Point r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Point slice(const Point& a, std::size_t begin, std::size_t len) {
  if (begin + len > a.size()) throw std::invalid_argument("slice out of range");
  return Point(a.begin() + begin, a.begin() + begin + len);
}

/// Dense row-major matrix, sized for desk-scale instances.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  Point apply(const Point& x) const {
    if (x.size() != cols) throw std::invalid_argument("matvec dimension mismatch");
    Point y(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
      double s = 0.0;
      const double* row = data.data() + i * cols;
      for (std::size_t j = 0; j < cols; ++j) s += row[j] * x[j];
      y[i] = s;
    }
    return y;
  }

  Point apply_transposed(const Point& x) const {
    if (x.size() != rows) throw std::invalid_argument("matvec dimension mismatch");
    Point y(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
      const double* row = data.data() + i * cols;
      for (std::size_t j = 0; j < cols; ++j) y[j] += row[j] * x[i];
    }
    return y;
  }
};

/// Spectral norm via power iteration on A^T A.
inline double spectral_norm(const Matrix& a, int iterations = 500) {
  if (a.rows == 0 || a.cols == 0) return 0.0;
  Point v(a.cols, 1.0 / std::sqrt(static_cast<double>(a.cols)));
  for (int it = 0; it < iterations; ++it) {
    Point w = a.apply_transposed(a.apply(v));
    double n = nrm2(w);
    if (n == 0.0) return 0.0;
    for (auto& c : w) c /= n;
    v = std::move(w);
  }
  return nrm2(a.apply(v));
}

/// Uniform double in [0,1) built from the raw 64-bit output, so streams are
/// identical across standard libraries (distributions are not portable).
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline double normal01(std::mt19937_64& rng) {
  // Box-Muller on the portable uniform stream.
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic hash of a pair of points into [0,1).
inline double hash01(const Point& x, const Point& y, std::uint64_t seed) {
  std::uint64_t h = splitmix64(seed);
  auto mix = [&h](double v) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    h = splitmix64(h ^ bits);
  };
  for (double v : x) mix(v);
  h = splitmix64(h ^ 0x5bf03635ULL);
  for (double v : y) mix(v);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace proxeq
