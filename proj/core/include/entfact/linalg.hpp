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

#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace entfact {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Everything in this library lives in
// dimension <= 16, so no attempt is made at blocking or sparsity; state
// vectors are stored as n x 1 columns.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);  // zero-filled
  ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

  static ComplexMatrix identity(int n);
  // n x 1 column vector.
  static ComplexMatrix column(std::vector<Complex> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(int r, int c) const { return entries_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix dagger() const;     // conjugate transpose
  ComplexMatrix conjugate() const;  // entrywise conjugate
  ComplexMatrix transpose() const;

  Complex trace() const;
  double max_abs() const;         // max-norm, max_ij |a_ij|
  double frobenius_norm() const;
  bool all_finite() const;
  // max_ij |a_ij - conj(a_ji)|; 0 for exactly Hermitian input.
  double hermiticity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(double scalar, ComplexMatrix m);

// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// (m + m†)/2, exact Hermitian symmetrization
ComplexMatrix hermitize(const ComplexMatrix& m);

// Pauli matrices in the canonical {|0>, |1>} basis.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Eigensystem of a Hermitian matrix. `values` are sorted non-increasing;
// when present, `vectors` holds the matching eigenvectors as columns.
struct Spectrum {
  std::vector<double> values;
  std::optional<ComplexMatrix> vectors;
};

// Kronecker product; the left factor is the "left" (most significant)
// subsystem, giving basis order |00>, |01>, |10>, |11> for qubit pairs.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Cyclic complex Jacobi eigensolver. Requires hermiticity within 1e-10
// (max |h - h†|), throws NotHermitianError otherwise. Convergence:
// off-diagonal Frobenius mass below 1e-14 relative to ||h||_F within a
// budget of 100 sweeps, else NoConvergenceError.
Spectrum eig_hermitian(const ComplexMatrix& h, bool with_vectors = true);

// Hermitian PSD square root via the eigensystem. Eigenvalues in
// (-1e-10, 0) are clamped to zero; anything below -1e-10 throws
// NotPSDError. The result S satisfies ||S*S - h||_max <= 1e-9.
ComplexMatrix sqrtm_psd(const ComplexMatrix& h);

// Trace out every subsystem not listed in `keep` (0-based indices into
// `dims`, left subsystem first). The product of dims must match the row
// count; throws DimensionMismatchError otherwise.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep);

}  // namespace entfact
