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

// Independent reference computations for the test suite. Everything here is
// written against its own bare vector-of-vectors matrix type with plain index
// loops, deliberately sharing no code path with the library under test.

#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = std::vector<std::vector<cplx>>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<cplx>(c)); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t r = a.size(), inner = b.size(), c = b[0].size();
  assert(a[0].size() == inner);
  Mat out = zeros(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Mat add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[i][j] += b[i][j];
  return out;
}

inline Mat scale(const Mat& a, cplx s) {
  Mat out = a;
  for (auto& row : out)
    for (auto& v : row) v *= s;
  return out;
}

inline Mat dagger(const Mat& a) {
  Mat out = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = std::conj(a[i][j]);
  return out;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Mat out = zeros(ar * br, ac * bc);
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

inline cplx trace(const Mat& a) {
  cplx t{};
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

inline Mat pauli_mat(int k) {
  const cplx i{0.0, 1.0};
  switch (k) {
    case 0: return {{1, 0}, {0, 1}};
    case 1: return {{0, 1}, {1, 0}};
    case 2: return {{0, -i}, {i, 0}};
    default: return {{1, 0}, {0, -1}};
  }
}

struct SwitchResult {
  Mat unnormalized;  // post-selected target state, trace = probability
  double probability = 0.0;
};

// Brute-force reference for the post-selected switch over n completely
// depolarizing qubit channels: loops over all 4^n Pauli index tuples, builds
// each joint operator block by block, evolves control (x) target, projects
// the control and traces it out. `orders` holds one n-permutation per control
// basis state; `control` is used for preparation and projection alike.
inline SwitchResult cdc_switch_qubit(int n, const std::vector<std::vector<int>>& orders,
                                     const Mat& rho, const std::vector<cplx>& control) {
  const std::size_t m = orders.size();
  const std::size_t jd = m * 2;

  Mat ctrl_proj = zeros(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ctrl_proj[i][j] = control[i] * std::conj(control[j]);
  const Mat joint_in = kron(ctrl_proj, rho);

  double norm = 1.0;
  for (int i = 0; i < n; ++i) norm *= 0.5;  // one 1/d per depolarizing Kraus operator

  std::size_t tuples = 1;
  for (int i = 0; i < n; ++i) tuples *= 4;

  Mat evolved = zeros(jd, jd);
  for (std::size_t code = 0; code < tuples; ++code) {
    std::vector<int> tuple(n);
    std::size_t rest = code;
    for (int slot = 0; slot < n; ++slot) {
      tuple[slot] = static_cast<int>(rest % 4);
      rest /= 4;
    }
    Mat w = zeros(jd, jd);
    for (std::size_t k = 0; k < m; ++k) {
      Mat prod = eye(2);
      for (int ch : orders[k]) prod = mul(pauli_mat(tuple[ch]), prod);  // first entry acts first, ending rightmost
      prod = scale(prod, norm);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) w[k * 2 + i][k * 2 + j] = prod[i][j];
    }
    evolved = add(evolved, mul(mul(w, joint_in), dagger(w)));
  }

  const Mat proj = kron(ctrl_proj, eye(2));
  const Mat selected = mul(mul(proj, evolved), proj);

  SwitchResult result;
  result.unnormalized = zeros(2, 2);
  for (std::size_t k = 0; k < m; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) result.unnormalized[i][j] += selected[k * 2 + i][k * 2 + j];
  result.probability = trace(result.unnormalized).real();
  return result;
}

// Closed-form qubit fidelity F = tr(rho sigma) + 2 sqrt(det rho det sigma),
// valid for 2x2 density matrices; avoids any eigendecomposition.
inline double qubit_fidelity(const Mat& rho, const Mat& sigma) {
  const double t = trace(mul(rho, sigma)).real();
  const double det_r = (rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0]).real();
  const double det_s = (sigma[0][0] * sigma[1][1] - sigma[0][1] * sigma[1][0]).real();
  const double cross = std::sqrt(std::max(det_r, 0.0)) * std::sqrt(std::max(det_s, 0.0));
  return t + 2.0 * cross;
}

// Eigenvalues of a 2x2 Hermitian matrix by the quadratic formula, descending.
inline std::pair<double, double> herm2_eigenvalues(const Mat& m) {
  const double a = m[0][0].real();
  const double c = m[1][1].real();
  const double half_sum = 0.5 * (a + c);
  const double rad = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(m[0][1]));
  return {half_sum + rad, half_sum - rad};
}

}  // namespace oracle
