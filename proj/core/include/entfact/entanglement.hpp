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

#include <functional>

#include "entfact/channels.hpp"

namespace entfact {

// One side-by-side inequality check. `passed` allows numerical slack of
// 1e-9 on true equalities.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool passed = true;   // margin >= -1e-9
};

inline constexpr double kBoundSlack = 1e-9;

// Eigenvalues of rho * rho_tilde in non-increasing order, where
// rho_tilde = (sy (x) sy) conj(rho) (sy (x) sy). Computed as the spectrum of
// the Hermitian PSD matrix sqrt(rho) * rho_tilde * sqrt(rho), which shares
// the characteristic polynomial (AB and BA for A = sqrt(rho),
// B = sqrt(rho) * rho_tilde). Values are returned raw: tiny negatives from
// roundoff are not clamped here.
Spectrum wootters_spectrum(const DensityMatrix& rho);

// Wootters concurrence C = max{0, sqrt(x1)-sqrt(x2)-sqrt(x3)-sqrt(x4)}.
// Eigenvalues below 1e-13 relative to the leading one (or below 1e-15
// absolute) are treated as exact zeros: rank-deficient products report
// their zeros at roundoff level, and taking square roots of that noise
// would cost ~1e-8 of accuracy. Throws InvalidStateError when
// validate_density fails.
double concurrence(const DensityMatrix& rho);

// 2|ad - bc| for a two-qubit pure state with amplitudes (a, b, c, d);
// equals 2 sqrt(w(1-w)) on the Schmidt family.
double concurrence_pure(const PureState& psi);

// Concurrence of the unnormalized one-sided channel output,
// prob * C(state). For trace-preserving channels this is the plain
// concurrence of the output; the trace weight is what makes the
// factorization law exact for filters as well.
double output_concurrence(const KrausChannel& ch, const DensityMatrix& rho,
                          Side side);

// | C[(1(x)$)|psi>] - C[(1(x)$)|phi+>] * C(psi) | with every concurrence
// computed independently (channel outputs trace-weighted). If the channel
// annihilates |psi> and C(psi) = 0 both sides vanish and 0 is returned;
// annihilation of an entangled state propagates ZeroProbabilityError.
double factorization_residual(const KrausChannel& ch, const PureState& psi);

// lhs = C[(1(x)$) rho0], rhs = C[(1(x)$)|phi+>] * C(rho0).
BoundReport mixed_bound_margin(const KrausChannel& ch,
                               const DensityMatrix& rho0);

// lhs = C[($1(x)$2) rho0],
// rhs = C[($1(x)1)|phi+>] * C[(1(x)$2)|phi+>] * C(rho0).
BoundReport two_sided_margin(const KrausChannel& ch1, const KrausChannel& ch2,
                             const DensityMatrix& rho0);

// lhs = C[(1(x)$2∘$1)|phi+>], rhs = C[(1(x)$2)|phi+>] * C[(1(x)$1)|phi+>].
BoundReport concat_margin(const KrausChannel& ch2, const KrausChannel& ch1);

// Parameter in [0,1] -> channel.
using ChannelFamily = std::function<KrausChannel(double)>;

enum class SideConfig { OneSided, TwoSided };

// Smallest parameter at which the two-sided bound's right-hand side reaches
// zero, found by bisection to absolute tolerance `tol`. Every state is
// certified disentangled from that parameter on. The family's probe
// concurrence must be non-increasing up to its first zero on a 101-point
// grid (NotMonotonicError otherwise); if it never reaches zero on [0,1],
// NoRootError.
double disentanglement_threshold(const ChannelFamily& family,
                                 SideConfig side_config, double tol);

}  // namespace entfact
