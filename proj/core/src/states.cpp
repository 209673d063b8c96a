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

#include "entfact/states.hpp"

#include <cmath>
#include <string>

#include "entfact/errors.hpp"
#include "entfact/rng.hpp"

namespace entfact {

namespace {

Sides sides_for_dim(int dim) {
  int qubits = 0;
  int d = dim;
  while (d > 1) {
    if (d % 2 != 0)
      throw DimensionMismatchError("state dimension " + std::to_string(dim) +
                                   " is not a power of two");
    d /= 2;
    ++qubits;
  }
  return Sides{(qubits + 1) / 2, qubits / 2};
}

}  // namespace

PureState pure_chi(double omega) {
  if (!(omega >= 0.0 && omega <= 1.0))
    throw OutOfRangeError("pure_chi: omega must be in [0,1]");
  return PureState{ComplexMatrix::column(
      {std::sqrt(omega), 0.0, 0.0, std::sqrt(1.0 - omega)})};
}

PureState bell_phi_plus() { return pure_chi(0.5); }

DensityMatrix density_from_pure(const PureState& psi) {
  const int n = psi.vec.rows();
  ComplexMatrix rho(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rho(i, j) = psi.vec(i, 0) * std::conj(psi.vec(j, 0));
  return DensityMatrix{std::move(rho), sides_for_dim(n)};
}

PureState random_pure(std::uint64_t seed) {
  SplitMix64 g(seed);
  std::vector<Complex> amps(4);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& a : amps) {
      a = g.next_complex_gaussian();
      norm2 += std::norm(a);
    }
  } while (norm2 < 1e-24);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  return PureState{ComplexMatrix::column(std::move(amps))};
}

DensityMatrix random_mixed(std::uint64_t seed, int rank) {
  if (rank < 1 || rank > 4)
    throw OutOfRangeError("random_mixed: rank must be in 1..4");
  SplitMix64 g(seed);
  // Haar pure state on C^4 (x) C^rank, reshaped so that A(s, e) is the
  // amplitude of |s>|e>; tracing out the ancilla gives rho = A A†.
  ComplexMatrix a(4, rank);
  double norm2 = 0.0;
  for (int s = 0; s < 4; ++s)
    for (int e = 0; e < rank; ++e) {
      a(s, e) = g.next_complex_gaussian();
      norm2 += std::norm(a(s, e));
    }
  const double inv = 1.0 / std::sqrt(norm2);
  a *= Complex(inv, 0.0);
  ComplexMatrix rho = a * a.dagger();
  return DensityMatrix{hermitize(rho), Sides{1, 1}};
}

Validation validate_density(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.mat;
  if (m.rows() != m.cols() || m.rows() == 0)
    return {false, "not a square matrix"};
  if (!m.all_finite()) return {false, "non-finite entry"};
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol)
    return {false, "not hermitian (defect " + std::to_string(defect) + ")"};
  const double tr_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (tr_err > kHermitianTol)
    return {false, "trace differs from 1 by " + std::to_string(tr_err)};
  const Spectrum s = eig_hermitian(m, false);
  const double min_eig = s.values.back();
  if (min_eig < kEigenFloor)
    return {false, "negative eigenvalue (" + std::to_string(min_eig) + ")"};
  return {true, ""};
}

}  // namespace entfact
