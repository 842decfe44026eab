// Copyright 2026 The Semmem Authors.
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

#include "semmem/mds.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "semmem/error.hpp"

namespace semmem::mds {
namespace {

struct Deflated {
  std::size_t n;
  const std::vector<double>& b;
  const std::vector<std::vector<double>>& vectors;
  const std::vector<double>& values;
  double shift;

  // y = (B - sum lambda_l u_l u_l^T + shift I) x
  void Apply(const std::vector<double>& x, std::vector<double>& y) const {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      const double* row = &b[i * n];
      for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
      y[i] = s + shift * x[i];
    }
    for (std::size_t l = 0; l < vectors.size(); ++l) {
      const auto& u = vectors[l];
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += u[i] * x[i];
      const double c = values[l] * dot;
      for (std::size_t i = 0; i < n; ++i) y[i] -= c * u[i];
    }
  }
};

double Norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
  bool converged = false;
};

EigenPair PowerIterate(const Deflated& op, std::vector<double> v, double scale,
                       const PowerIterationOptions& options) {
  const std::size_t n = op.n;
  std::vector<double> w(n);
  EigenPair out;
  double norm = Norm(v);
  for (double& x : v) x /= norm;
  double prev = 0.0;
  for (int it = 0; it < options.max_iter; ++it) {
    op.Apply(v, w);
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += v[i] * w[i];
    double wn = Norm(w);
    if (wn <= 1e-300) {
      // v is in the null space of the (deflated) operator.
      out.value = 0.0;
      out.vector = v;
      out.converged = true;
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) w[i] /= wn;
    v.swap(w);
    const double ref = std::max({std::abs(lambda), scale, 1e-300});
    if (it > 0 && std::abs(lambda - prev) <= options.tol * ref) {
      op.Apply(v, w);
      double final_lambda = 0.0;
      for (std::size_t i = 0; i < n; ++i) final_lambda += v[i] * w[i];
      out.value = final_lambda;
      out.vector = v;
      out.converged = true;
      return out;
    }
    prev = lambda;
  }
  out.vector = v;
  return out;
}

}  // namespace

Embedding ClassicalMds(const cluster::DistanceMatrix& distances, std::size_t dim,
                       const PowerIterationOptions& options) {
  const std::size_t n = distances.size();
  if (dim < 1 || (n > 1 && dim > n - 1) || (n <= 1 && dim > 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "dim=" + std::to_string(dim) + " must lie in [1, n-1] for n=" + std::to_string(n));
  }
  Embedding emb;
  emb.n = n;
  emb.dim = dim;
  emb.coords.assign(n * dim, 0.0);
  if (n <= 1) return emb;

  // Double centering of the squared distances.
  std::vector<double> b(n * n);
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d2 = distances(i, j) * distances(i, j);
      b[i * n + j] = d2;
      row_mean[i] += d2;
    }
    grand += row_mean[i];
    row_mean[i] /= static_cast<double>(n);
  }
  grand /= static_cast<double>(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b[i * n + j] = -0.5 * (b[i * n + j] - row_mean[i] - row_mean[j] + grand);
    }
  }

  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<std::vector<double>> vectors;
  std::vector<double> values;
  double scale = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<double> start(n);
    for (double& x : start) x = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;

    Deflated op{n, b, vectors, values, 0.0};
    EigenPair pair = PowerIterate(op, start, scale, options);
    if (pair.converged && pair.value < 0.0) {
      // Dominant remaining eigenvalue is negative; shift to find the
      // algebraically largest one instead.
      Deflated shifted{n, b, vectors, values, -pair.value};
      EigenPair alt = PowerIterate(shifted, start, scale - pair.value, options);
      if (alt.converged) {
        alt.value += pair.value;
        pair = alt;
      } else {
        pair.converged = false;
      }
    }
    if (!pair.converged) {
      throw Error(ErrorCode::kNumeric,
                  "power iteration did not converge for eigenpair " + std::to_string(k));
    }
    // Sign convention: largest-magnitude component positive.
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(pair.vector[i]) > std::abs(pair.vector[arg])) arg = i;
    }
    if (pair.vector[arg] < 0.0) {
      for (double& x : pair.vector) x = -x;
    }
    if (k == 0) scale = std::abs(pair.value);
    emb.eigenvalues.push_back(pair.value);
    const double root = pair.value > 0.0 ? std::sqrt(pair.value) : 0.0;
    for (std::size_t i = 0; i < n; ++i) emb.coords[i * dim + k] = pair.vector[i] * root;
    values.push_back(pair.value);
    vectors.push_back(std::move(pair.vector));
  }

  for (std::size_t k = 0; k < dim; ++k) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += emb.coords[i * dim + k];
    mean /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) emb.coords[i * dim + k] -= mean;
  }
  return emb;
}

}  // namespace semmem::mds
