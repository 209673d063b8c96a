// Copyright 2026 The entfact Authors
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

#include "entfact/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "entfact/errors.hpp"

namespace entfact {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kPsdFloor = -1e-10;
constexpr double kOffDiagRelTol = 1e-14;
constexpr int kMaxSweeps = 100;

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError(std::string(who) + ": matrix is " +
                                 std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()) + ", need square");
  }
}

double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). A <- J† A J with the plane
// rotation J = [[c, s f], [-s conj(f), c]] on columns (p, q), where
// f = a_pq/|a_pq| and (c, s) is the classic real rotation for the
// phase-stripped 2x2 block. V accumulates column transforms.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix* v, int p, int q) {
  const Complex apq = a(p, q);
  const double m = std::abs(apq);
  if (m == 0.0) return;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const Complex f = apq / m;
  const double tau = (aqq - app) / (2.0 * m);
  const double t =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex sf = s * f;
  const Complex sfc = s * std::conj(f);

  const int n = a.rows();
  for (int i = 0; i < n; ++i) {  // A <- A J
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = c * aip - sfc * aiq;
    a(i, q) = sf * aip + c * aiq;
  }
  for (int j = 0; j < n; ++j) {  // A <- J† A
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = c * apj - sf * aqj;
    a(q, j) = sfc * apj + c * aqj;
  }
  // The pivot block is known analytically; writing it directly keeps the
  // matrix exactly Hermitian with a real diagonal.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(c * c * app - 2.0 * s * c * m + s * s * aqq, 0.0);
  a(q, q) = Complex(s * s * app + 2.0 * s * c * m + c * c * aqq, 0.0);

  if (v) {
    for (int i = 0; i < n; ++i) {
      const Complex vip = (*v)(i, p);
      const Complex viq = (*v)(i, q);
      (*v)(i, p) = c * vip - sfc * viq;
      (*v)(i, q) = sf * vip + c * viq;
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(rows_) * cols_) {
    throw DimensionMismatchError("ComplexMatrix: entry count " +
                                 std::to_string(entries_.size()) +
                                 " does not match " + std::to_string(rows_) +
                                 "x" + std::to_string(cols_));
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::column(std::vector<Complex> entries) {
  const int n = static_cast<int>(entries.size());
  return ComplexMatrix(n, 1, std::move(entries));
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& e : out.entries_) e = std::conj(e);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += std::norm(e);
  return std::sqrt(sum);
}

bool ComplexMatrix::all_finite() const {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

double ComplexMatrix::hermiticity_defect() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatchError("operator+=: shape mismatch");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatchError("operator-=: shape mismatch");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatchError("operator*: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

ComplexMatrix operator*(double scalar, ComplexMatrix m) {
  m *= Complex(scalar, 0.0);
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatchError("max_abs_diff: shape mismatch");
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  require_square(m, "hermitize");
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return out;
}

ComplexMatrix pauli_x() {
  return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

Spectrum eig_hermitian(const ComplexMatrix& h, bool with_vectors) {
  require_square(h, "eig_hermitian");
  const double defect = h.hermiticity_defect();
  if (!(defect <= kHermTol)) {
    throw NotHermitianError("eig_hermitian: hermiticity defect " +
                            std::to_string(defect));
  }
  const int n = h.rows();
  ComplexMatrix a = hermitize(h);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double fro = a.frobenius_norm();
  const double thresh = kOffDiagRelTol * fro;

  bool converged = (fro == 0.0) || (offdiag_frobenius(a) <= thresh);
  for (int sweep = 0; !converged && sweep < kMaxSweeps; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        jacobi_rotate(a, with_vectors ? &v : nullptr, p, q);
    converged = offdiag_frobenius(a) <= thresh;
  }
  if (!converged)
    throw NoConvergenceError("eig_hermitian: no convergence in " +
                             std::to_string(kMaxSweeps) + " sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  Spectrum s;
  s.values.resize(n);
  for (int i = 0; i < n; ++i) s.values[i] = a(order[i], order[i]).real();
  if (with_vectors) {
    ComplexMatrix vec(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) vec(i, j) = v(i, order[j]);
    s.vectors = std::move(vec);
  }
  return s;
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& h) {
  Spectrum s = eig_hermitian(h, true);
  const int n = h.rows();
  for (double lam : s.values) {
    if (lam < kPsdFloor)
      throw NotPSDError("sqrtm_psd: eigenvalue " + std::to_string(lam) +
                        " below -1e-10");
  }
  const ComplexMatrix& v = *s.vectors;
  ComplexMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    const double r = std::sqrt(std::max(s.values[k], 0.0));
    if (r == 0.0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) += r * v(i, k) * std::conj(v(j, k));
  }
  return hermitize(out);
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  require_square(rho, "partial_trace");
  const int n = static_cast<int>(dims.size());
  int total = 1;
  for (int d : dims) {
    if (d <= 0) throw DimensionMismatchError("partial_trace: dim <= 0");
    total *= d;
  }
  if (total != rho.rows())
    throw DimensionMismatchError("partial_trace: dims product " +
                                 std::to_string(total) + " != rows " +
                                 std::to_string(rho.rows()));
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n)
      throw DimensionMismatchError("partial_trace: keep index out of range");
    if (kept[k])
      throw DimensionMismatchError("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  std::vector<int> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<int> keep_idx, trace_idx;
  for (int i = 0; i < n; ++i) (kept[i] ? keep_idx : trace_idx).push_back(i);

  int dim_keep = 1, dim_trace = 1;
  for (int i : keep_idx) dim_keep *= dims[i];
  for (int i : trace_idx) dim_trace *= dims[i];

  // Mixed-radix decomposition of a flat index over the given subsystems.
  auto offset = [&](int flat, const std::vector<int>& subsys) {
    int off = 0;
    for (int k = static_cast<int>(subsys.size()) - 1; k >= 0; --k) {
      const int d = dims[subsys[k]];
      off += (flat % d) * stride[subsys[k]];
      flat /= d;
    }
    return off;
  };

  ComplexMatrix out(dim_keep, dim_keep);
  for (int r = 0; r < dim_keep; ++r) {
    const int roff = offset(r, keep_idx);
    for (int c = 0; c < dim_keep; ++c) {
      const int coff = offset(c, keep_idx);
      Complex sum = 0.0;
      for (int t = 0; t < dim_trace; ++t) {
        const int toff = offset(t, trace_idx);
        sum += rho(roff + toff, coff + toff);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

}  // namespace entfact
