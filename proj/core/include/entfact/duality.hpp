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

#include "entfact/channels.hpp"
#include "entfact/entanglement.hpp"

namespace entfact {

// Jamiolkowski dual of a channel: the normalized state obtained by sending
// the right half of |phi+> through it, plus the pre-normalization trace p''.
// For a trace-preserving source prob == 1 and the left marginal is 1/2.
struct ChoiState {
  DensityMatrix state;
  double prob = 1.0;
};

ChoiState choi_state(const KrausChannel& ch);

// Max-norm residual of the state/channel interchange identity: the channel
// acting on the right qubit of |chi(w)> against the filter M(w) acting on
// the LEFT qubit of the channel's Choi state (that orientation is pinned by
// the identity channel, whose both sides are |chi(w)><chi(w)|). Endpoints
// w in {0,1} are excluded: M is singular there.
double dual_check(const KrausChannel& ch, double omega);

struct EigenProportionality {
  Spectrum xi;      // spectrum of rho' * rho'_tilde (direct picture)
  Spectrum mu;      // spectrum of rho_$ * rho_$_tilde (Choi picture)
  double factor;    // w(1-w) / (4 p^2)
  double residual;  // max_i |xi_i - factor * mu_i| over sorted spectra
};

// The proportionality between the two Wootters spectra that drives the
// factorization law; p is the probability of the filter branch on the Choi
// state. For a trace-preserving channel p = 1/4 and factor = 4 w(1-w).
EigenProportionality eigen_proportionality(const KrausChannel& ch,
                                           double omega);

// Inverse dictionary: Kraus operators from the eigensystem of the rescaled
// Choi matrix. Round trips choi_state within 1e-9. Throws NotPSDError if
// the Choi matrix has an eigenvalue below -1e-10.
KrausChannel channel_from_choi(const ChoiState& cs);

}  // namespace entfact
