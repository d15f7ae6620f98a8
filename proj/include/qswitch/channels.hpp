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

// Kraus-operator channels: the completely depolarizing channel as a uniform
// unitary mixture, single-unitary channels, and channel application.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qswitch/qmath.hpp"

namespace qsw {

// Density operator: Hermitian, unit trace, PSD (within tol::validation).
// Invariants are checked eagerly at construction; internal arithmetic works
// on plain ComplexMatrix and re-enters this type only at module boundaries.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw dimension_error("DensityMatrix: matrix is not square");
    if (!m_.all_finite()) throw validation_error("DensityMatrix: non-finite entries");
    if (!m_.is_hermitian(tol::validation)) {
      throw validation_error("DensityMatrix: not Hermitian within tolerance");
    }
    if (std::abs(m_.trace() - cplx{1.0, 0.0}) > tol::validation) {
      throw validation_error("DensityMatrix: trace differs from 1");
    }
    const EigenSystem es = eig_herm(m_);
    if (es.eigenvalues.back() < -tol::validation) {
      throw validation_error("DensityMatrix: negative eigenvalue beyond tolerance");
    }
  }

  static DensityMatrix pure(const StateVector& psi) { return DensityMatrix(psi.projector()); }

  static DensityMatrix maximally_mixed(int d) {
    if (d < 1) throw validation_error("DensityMatrix::maximally_mixed: d must be positive");
    return DensityMatrix(ComplexMatrix::identity(d) / double(d));
  }

  int dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

enum class PauliIndex : int { I = 0, X = 1, Y = 2, Z = 3 };

inline PauliIndex pauli_index(int value) {
  if (value < 0 || value > 3) throw validation_error("pauli_index: value must be in 0..3");
  return static_cast<PauliIndex>(value);
}

inline char pauli_label(PauliIndex p) { return "IXYZ"[static_cast<int>(p)]; }

inline ComplexMatrix pauli(PauliIndex idx) {
  switch (idx) {
    case PauliIndex::I:
      return ComplexMatrix{{1, 0}, {0, 1}};
    case PauliIndex::X:
      return ComplexMatrix{{0, 1}, {1, 0}};
    case PauliIndex::Y:
      return ComplexMatrix{{0, cplx{0, -1}}, {cplx{0, 1}, 0}};
    case PauliIndex::Z:
      return ComplexMatrix{{1, 0}, {0, -1}};
  }
  throw validation_error("pauli: bad index");
}

// Trace-preserving channel as a finite Kraus set {K_i}, sum K_i^dg K_i = I.
class KrausChannel {
 public:
  KrausChannel(std::vector<ComplexMatrix> kraus, std::string label)
      : kraus_(std::move(kraus)), label_(std::move(label)) {
    if (kraus_.empty()) throw validation_error("KrausChannel: needs at least one operator");
    const int d = kraus_.front().rows();
    ComplexMatrix sum(d, d);
    for (const ComplexMatrix& k : kraus_) {
      if (!k.is_square() || k.rows() != d) {
        throw dimension_error("KrausChannel: operators must share one square dimension");
      }
      if (!k.all_finite()) throw validation_error("KrausChannel: non-finite entries");
      sum += k.adjoint() * k;
    }
    if (!approx_equal(sum, ComplexMatrix::identity(d), tol::validation)) {
      throw validation_error("KrausChannel: completeness relation violated");
    }
  }

  int dim() const { return kraus_.front().rows(); }
  int size() const { return static_cast<int>(kraus_.size()); }
  const ComplexMatrix& kraus(int i) const { return kraus_[i]; }
  const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<ComplexMatrix> kraus_;
  std::string label_;
};

// Clock-and-shift unitary basis X^a Z^b, a,b in 0..d-1; reduces to
// {I, Z, X, XZ} at d = 2 and is orthogonal under the trace inner product.
inline std::vector<ComplexMatrix> weyl_basis(int d) {
  if (d < 2) throw validation_error("weyl_basis: d must be at least 2");
  ComplexMatrix shift(d, d);
  for (int j = 0; j < d; ++j) shift((j + 1) % d, j) = 1.0;
  ComplexMatrix clock(d, d);
  for (int j = 0; j < d; ++j) {
    const double ang = 2.0 * M_PI * j / d;
    clock(j, j) = cplx{std::cos(ang), std::sin(ang)};
  }
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  ComplexMatrix xa = ComplexMatrix::identity(d);
  for (int a = 0; a < d; ++a) {
    ComplexMatrix u = xa;
    for (int b = 0; b < d; ++b) {
      basis.push_back(u);
      u = u * clock;
    }
    xa = xa * shift;
  }
  return basis;
}

// Completely depolarizing channel: d^2 Kraus operators U_i / d over an
// orthogonal unitary basis (Pauli set at d=2, clock-and-shift above). Maps
// every input to I/d; the 1/d normalization lives inside each operator so
// application stays weight-free.
inline KrausChannel depolarizing_channel(int d) {
  if (d < 2) throw validation_error("depolarizing_channel: d must be at least 2");
  std::vector<ComplexMatrix> ops;
  if (d == 2) {
    ops = {pauli(PauliIndex::I), pauli(PauliIndex::X), pauli(PauliIndex::Y),
           pauli(PauliIndex::Z)};
  } else {
    ops = weyl_basis(d);
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(ops.size());
  for (const ComplexMatrix& u : ops) kraus.push_back(u / double(d));
  return KrausChannel(std::move(kraus), "depolarizing(d=" + std::to_string(d) + ")");
}

inline KrausChannel unitary_channel(const ComplexMatrix& u, std::string label = "unitary") {
  if (!u.is_square()) throw dimension_error("unitary_channel: matrix is not square");
  if (!u.is_unitary(tol::validation)) {
    throw validation_error("unitary_channel: matrix is not unitary within tolerance");
  }
  return KrausChannel({u}, std::move(label));
}

// rho -> sum_i K_i rho K_i^dg
inline DensityMatrix apply_channel(const KrausChannel& c, const DensityMatrix& rho) {
  if (c.dim() != rho.dim()) throw dimension_error("apply_channel: dimension mismatch");
  ComplexMatrix out(c.dim(), c.dim());
  for (const ComplexMatrix& k : c.kraus_ops()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(std::move(out));
}

}  // namespace qsw
