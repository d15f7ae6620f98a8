// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Shared helpers for the test suite: randomized quantum objects built on the
// standard-library Mersenne Twister (not the library's own generator), plus
// converters between the library matrix type and the oracle matrix type.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "oracle_util.hpp"
#include "qswitch/channels.hpp"
#include "qswitch/qmath.hpp"

namespace testutil {

using qsw::cplx;

inline qsw::StateVector random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> amps(dim);
  double norm2 = 0.0;
  for (cplx& a : amps) {
    a = cplx{gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cplx& a : amps) a *= inv;
  return qsw::StateVector(std::move(amps));
}

inline qsw::DensityMatrix random_pure_density(int dim, std::mt19937_64& rng) {
  return qsw::DensityMatrix::pure(random_state(dim, rng));
}

// Random full-rank mixed state: a uniform-weight-simplex mixture of dim+1
// random pure states.
inline qsw::DensityMatrix random_mixed_density(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const int terms = dim + 1;
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) {
    w = -std::log(1.0 - uniform(rng));  // exponential draws normalize to a flat simplex
    total += w;
  }
  qsw::ComplexMatrix rho(dim, dim);
  for (int t = 0; t < terms; ++t) {
    rho += (weights[t] / total) * random_state(dim, rng).projector();
  }
  return qsw::DensityMatrix(rho);
}

inline qsw::DensityMatrix random_density(int dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  return coin(rng) ? random_pure_density(dim, rng) : random_mixed_density(dim, rng);
}

// Haar-ish random unitary via Gram-Schmidt on a Gaussian matrix; exact
// distribution does not matter for these tests, unitarity does.
inline qsw::ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<cplx>> cols(dim, std::vector<cplx>(dim));
  for (auto& col : cols)
    for (cplx& v : col) v = cplx{gauss(rng), gauss(rng)};
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < j; ++k) {
      cplx overlap{};
      for (int i = 0; i < dim; ++i) overlap += std::conj(cols[k][i]) * cols[j][i];
      for (int i = 0; i < dim; ++i) cols[j][i] -= overlap * cols[k][i];
    }
    double norm2 = 0.0;
    for (const cplx& v : cols[j]) norm2 += std::norm(v);
    const double inv = 1.0 / std::sqrt(norm2);
    for (cplx& v : cols[j]) v *= inv;
  }
  qsw::ComplexMatrix u(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) u(i, j) = cols[j][i];
  return u;
}

inline qsw::ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  qsw::ComplexMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    a(i, i) = cplx{gauss(rng), 0.0};
    for (int j = i + 1; j < dim; ++j) {
      const cplx v{gauss(rng), gauss(rng)};
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  return a;
}

inline qsw::ComplexMatrix random_psd(int dim, std::mt19937_64& rng) {
  const qsw::ComplexMatrix a = random_hermitian(dim, rng);
  return a * a;  // square of a Hermitian matrix is PSD
}

inline oracle::Mat to_oracle(const qsw::ComplexMatrix& m) {
  oracle::Mat out = oracle::zeros(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline qsw::ComplexMatrix from_oracle(const oracle::Mat& m) {
  qsw::ComplexMatrix out(static_cast<int>(m.size()), static_cast<int>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = m[i][j];
  return out;
}

inline double max_abs_diff_oracle(const qsw::ComplexMatrix& a, const oracle::Mat& b) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  return m;
}

}  // namespace testutil
