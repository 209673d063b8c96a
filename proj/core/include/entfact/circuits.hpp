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

#include "entfact/duality.hpp"

namespace entfact {

// Post-selected Bell-measurement branch. Only the |phi+> outcome is
// modeled; the other three outcomes and their correction unitaries are out
// of scope. Qubit 0 is the leftmost (most significant) position.

struct PureOutcome {
  PureState state;  // remaining qubits in original order; scalar when n == 2
  double prob = 0.0;
};

struct MixedOutcome {
  DensityMatrix state;
  double prob = 0.0;
};

// <phi+| on qubits (qa, qb) of an n-qubit register (n in 2..4), identity on
// the rest. Returns the normalized remainder and the branch probability;
// throws ZeroProbabilityError when the projection annihilates the state.
PureOutcome bell_project(const PureState& joint, int qa, int qb);
MixedOutcome bell_project(const DensityMatrix& joint, int qa, int qb);

// |psi> (x) |phi+>, Bell projection on qubits (0, 1): the standard
// teleportation identity. Output is |psi> on the last qubit, prob 1/4.
PureOutcome teleport_identity(const PureState& psi);

// Entanglement swapping: |chi(w)>_{01} (x) rho_$_{23}, Bell projection on
// qubits (1, 2). The state of qubits (0, 3) reproduces the direct one-sided
// channel action on |chi(w)>.
MixedOutcome entanglement_swap(double omega, const KrausChannel& ch);

}  // namespace entfact
