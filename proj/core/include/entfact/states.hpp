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

#include <cstdint>
#include <string>

#include "entfact/linalg.hpp"

namespace entfact {

// Qubit counts on the two sides of a bipartition. Single-qubit states use
// {1, 0}.
struct Sides {
  int left = 1;
  int right = 1;
};

struct PureState {
  ComplexMatrix vec;  // n x 1, unit norm
};

struct DensityMatrix {
  ComplexMatrix mat;
  Sides sides;
};

struct Validation {
  bool ok = true;
  std::string diagnostic;  // names the violated invariant when !ok
};

// sqrt(w)|00> + sqrt(1-w)|11>. Amplitudes off |00>,|11> are exactly zero.
PureState pure_chi(double omega);

// The maximally entangled probe (|00>+|11>)/sqrt(2), i.e. pure_chi(0.5).
PureState bell_phi_plus();

// |psi><psi| with sides inferred from the vector dimension.
DensityMatrix density_from_pure(const PureState& psi);

// Haar-random two-qubit pure state: four complex Gaussian amplitudes,
// normalized. Deterministic per seed.
PureState random_pure(std::uint64_t seed);

// Mixed two-qubit state of the given rank (1..4): the reduced state of a
// Haar-random pure state on C^4 (x) C^rank. Deterministic per seed.
DensityMatrix random_mixed(std::uint64_t seed, int rank);

// Checks finiteness, hermiticity (1e-10), unit trace (1e-10) and spectrum
// >= -1e-10. Never throws; the result carries the diagnosis.
Validation validate_density(const DensityMatrix& rho);

// Norm deviation tolerance shared by the pure-state constructors.
inline constexpr double kUnitNormTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigenFloor = -1e-10;

}  // namespace entfact
