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

// Dense complex matrix arithmetic for small Hilbert spaces (control x target,
// at most a few dozen rows), plus the spectral operations the rest of the
// library needs: Kronecker products, partial trace over the control factor,
// Hermitian eigendecomposition and the PSD matrix square root.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qswitch/errors.hpp"
#include "qswitch/tolerances.hpp"

namespace qsw {

using cplx = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
      throw validation_error("ComplexMatrix: dimensions must be positive");
    }
    data_.assign(static_cast<std::size_t>(rows) * cols, cplx{});
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = static_cast<int>(rows.size());
    if (rows_ == 0) throw validation_error("ComplexMatrix: empty row list");
    cols_ = static_cast<int>(rows.begin()->size());
    if (cols_ == 0) throw validation_error("ComplexMatrix: empty column list");
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) {
        throw dimension_error("ComplexMatrix: ragged row lengths");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  ComplexMatrix operator+(const ComplexMatrix& o) const {
    require_same_shape(o, "operator+");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
  }

  ComplexMatrix operator-(const ComplexMatrix& o) const {
    require_same_shape(o, "operator-");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("ComplexMatrix: inner dimensions differ");
    ComplexMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const cplx aik = (*this)(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += aik * o(k, j);
      }
    }
    return out;
  }

  ComplexMatrix operator*(cplx s) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
  }
  ComplexMatrix operator/(double s) const { return *this * cplx{1.0 / s, 0.0}; }

  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }
  friend ComplexMatrix operator*(double s, const ComplexMatrix& m) { return m * cplx{s, 0.0}; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  cplx trace() const {
    if (!is_square()) throw dimension_error("trace: matrix is not square");
    cplx t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (const cplx& v : data_) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
  }

  bool is_hermitian(double tolerance) const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i) {
      for (int j = i; j < cols_; ++j) {
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tolerance) return false;
      }
    }
    return true;
  }

  bool is_unitary(double tolerance) const {
    if (!is_square()) return false;
    const ComplexMatrix g = adjoint() * (*this);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{};
        if (std::abs(g(i, j) - want) > tolerance) return false;
      }
    }
    return true;
  }

 private:
  void require_same_shape(const ComplexMatrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw dimension_error(std::string("ComplexMatrix: shape mismatch in ") + what);
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_error("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance) {
  return max_abs_diff(a, b) <= tolerance;
}

// Kronecker product; block (i,j) of the result is a(i,j) * b.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia) {
    for (int ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a(ia, ja);
      if (f == cplx{}) continue;
      for (int ib = 0; ib < b.rows(); ++ib) {
        for (int jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
        }
      }
    }
  }
  return out;
}

// Traces out the first (control) tensor factor of a (c*t)x(c*t) matrix,
// leaving the t x t target block sum.
inline ComplexMatrix partial_trace_control(const ComplexMatrix& m, int control_dim,
                                           int target_dim) {
  if (control_dim < 1 || target_dim < 1) {
    throw dimension_error("partial_trace_control: dimensions must be positive");
  }
  if (!m.is_square() || m.rows() != control_dim * target_dim) {
    throw dimension_error("partial_trace_control: matrix is not (c*t) x (c*t)");
  }
  ComplexMatrix out(target_dim, target_dim);
  for (int k = 0; k < control_dim; ++k) {
    const int base = k * target_dim;
    for (int i = 0; i < target_dim; ++i)
      for (int j = 0; j < target_dim; ++j) out(i, j) += m(base + i, base + j);
  }
  return out;
}

struct EigenSystem {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;       // columns; m = V diag(eigenvalues) V^dagger
};

// Hermitian eigendecomposition by cyclic Jacobi rotations. Sufficient and
// robust at these sizes; converges quadratically once off-diagonal mass is
// small. Input must be Hermitian within tol::validation.
inline EigenSystem eig_herm(const ComplexMatrix& m) {
  if (!m.is_square()) throw dimension_error("eig_herm: matrix is not square");
  if (!m.is_hermitian(tol::validation)) {
    throw validation_error("eig_herm: matrix is not Hermitian within tolerance");
  }
  const int n = m.rows();

  // Work on the exactly-Hermitian part so the tolerance slack cannot drift.
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = cplx{m(i, i).real(), 0.0};
    for (int j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, a.max_abs());
  const double stop = 1e-15 * scale;
  const int max_sweeps = 60;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= stop) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const cplx phase = apq / r;

        // Rotation angle as in the real symmetric Jacobi step, applied in the
        // phase-rotated plane where the pivot is real positive.
        const double tau = (aqq - app) / (2.0 * r);
        double t;
        if (tau >= 0) {
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        } else {
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;             // G(p,q) = s e^{i phi}
        const cplx spc = std::conj(sp);        // used for G(q,p) = -s e^{-i phi}

        // Rows p and q of a <- G^dagger a.
        for (int j = 0; j < n; ++j) {
          const cplx ap = a(p, j);
          const cplx aq = a(q, j);
          a(p, j) = c * ap - sp * aq;
          a(q, j) = spc * ap + c * aq;
        }
        // Columns p and q of a <- a G, and accumulate v <- v G.
        for (int i = 0; i < n; ++i) {
          const cplx ap = a(i, p);
          const cplx aq = a(i, q);
          a(i, p) = c * ap - spc * aq;
          a(i, q) = sp * ap + c * aq;
          const cplx vp = v(i, p);
          const cplx vq = v(i, q);
          v(i, p) = c * vp - spc * vq;
          v(i, q) = sp * vp + c * vq;
        }
        a(p, q) = cplx{};
        a(q, p) = cplx{};
      }
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int x, int y) { return diag[x] > diag[y]; });

  EigenSystem es;
  es.eigenvalues.resize(n);
  es.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    es.eigenvalues[k] = diag[idx[k]];
    for (int i = 0; i < n; ++i) es.eigenvectors(i, k) = v(i, idx[k]);
  }
  return es;
}

// Hermitian PSD square root. Eigenvalues in [-tol::validation, 0) are clipped
// to zero; anything more negative rejects the input.
inline ComplexMatrix herm_sqrt(const ComplexMatrix& m) {
  const EigenSystem es = eig_herm(m);
  const int n = m.rows();
  ComplexMatrix out(n, n);
  std::vector<double> roots(n);
  for (int k = 0; k < n; ++k) {
    const double lam = es.eigenvalues[k];
    if (lam < -tol::validation) {
      throw validation_error("herm_sqrt: matrix has a negative eigenvalue beyond tolerance");
    }
    roots[k] = std::sqrt(std::max(lam, 0.0));
  }
  // V diag(sqrt(lambda)) V^dagger
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx acc{};
      for (int k = 0; k < n; ++k) {
        acc += es.eigenvectors(i, k) * roots[k] * std::conj(es.eigenvectors(j, k));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

class StateVector {
 public:
  explicit StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw validation_error("StateVector: no amplitudes");
    double norm2 = 0.0;
    for (const cplx& a : amps_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw validation_error("StateVector: non-finite amplitude");
      }
      norm2 += std::norm(a);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > tol::state_norm) {
      throw validation_error("StateVector: not normalized");
    }
  }

  static StateVector basis(int dim, int k) {
    if (dim < 1 || k < 0 || k >= dim) throw validation_error("StateVector::basis: bad index");
    std::vector<cplx> a(dim, cplx{});
    a[k] = 1.0;
    return StateVector(std::move(a));
  }

  // Uniform superposition over all basis states (the |+> control state).
  static StateVector uniform(int dim) {
    if (dim < 1) throw validation_error("StateVector::uniform: dim must be positive");
    return StateVector(std::vector<cplx>(dim, cplx{1.0 / std::sqrt(double(dim)), 0.0}));
  }

  int dim() const { return static_cast<int>(amps_.size()); }
  const cplx& operator[](int i) const { return amps_[i]; }

  // |v><v|
  ComplexMatrix projector() const {
    const int n = dim();
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) = amps_[i] * std::conj(amps_[j]);
    return out;
  }

  // dim x 1 column matrix, for applying operators in tests and demos.
  ComplexMatrix column() const {
    ComplexMatrix out(dim(), 1);
    for (int i = 0; i < dim(); ++i) out(i, 0) = amps_[i];
    return out;
  }

 private:
  std::vector<cplx> amps_;
};

// The four qubit input states used throughout: diagonal/antidiagonal and the
// two circular polarizations.
inline StateVector ket_diag() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector({cplx{s, 0}, cplx{s, 0}});
}
inline StateVector ket_antidiag() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector({cplx{s, 0}, cplx{-s, 0}});
}
inline StateVector ket_right() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector({cplx{s, 0}, cplx{0, s}});
}
inline StateVector ket_left() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector({cplx{s, 0}, cplx{0, -s}});
}

}  // namespace qsw
