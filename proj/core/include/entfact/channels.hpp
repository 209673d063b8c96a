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
#include <vector>

#include "entfact/states.hpp"

namespace entfact {

// Single-qubit channel as an explicit Kraus list; no superoperator or Choi
// form is cached, the Kraus operators are the single source of truth.
// Completeness: sum K†K <= 1 (within 1e-10); equality when trace_preserving.
struct KrausChannel {
  std::vector<ComplexMatrix> kraus;  // each 2x2
  bool trace_preserving = true;
};

// Normalized post-channel state together with the pre-normalization trace.
// For trace-preserving channels prob == 1; for filters it is the probability
// that the channel acted at all.
struct ApplicationResult {
  DensityMatrix state;
  double prob = 1.0;
};

enum class Side { Left, Right };

KrausChannel identity_channel();

// Kraus { diag(1, sqrt(1-g)), sqrt(g)|0><1| }.
KrausChannel make_amplitude_damping(double gamma);

// Kraus { sqrt(1-p) 1, sqrt(p) sigma_z }.
KrausChannel make_phase_flip(double p);

// Kraus { sqrt(1-3p/4) 1, sqrt(p/4) sigma_{x,y,z} }.
KrausChannel make_depolarizing(double p);

// The single-Kraus filter M = (sqrt(w)|0><0| + sqrt(1-w)|1><1|)/sqrt(2);
// not trace preserving.
KrausChannel make_filter(double omega);

// Trace-preserving channel with the given Kraus rank (1..4), drawn from a
// Haar-random isometry C^2 -> C^2 (x) C^rank (Gram-Schmidt on a Gaussian
// (2*rank) x 2 matrix). Deterministic per seed; rank 1 gives a Haar unitary.
KrausChannel random_channel(std::uint64_t seed, int kraus_rank);

// Concatenation: `second` after `first`; Kraus set {K2_i K1_j}.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

// sigma = sum_i A_i rho A_i† with A_i = K_i (x) 1 (Left) or 1 (x) K_i
// (Right); prob = tr sigma, state = sigma/prob. Throws ZeroProbabilityError
// when tr sigma <= 1e-14 (a filter annihilated the state).
ApplicationResult apply_one_sided(const KrausChannel& ch,
                                  const DensityMatrix& rho, Side side);

// ($1 (x) $2) rho as the two one-sided maps in sequence; prob multiplies.
ApplicationResult apply_two_sided(const KrausChannel& ch_left,
                                  const KrausChannel& ch_right,
                                  const DensityMatrix& rho);

Validation validate_channel(const KrausChannel& ch);

// JSON schema { "name": str, "trace_preserving": bool, "kraus": [ 2x2 of
// [re,im] ] }; throws ParseError on malformed input.
std::string channel_to_json(const KrausChannel& ch, const std::string& name);
KrausChannel channel_from_json(const std::string& text);

inline constexpr double kZeroProbCutoff = 1e-14;
inline constexpr double kCompletenessTol = 1e-10;

}  // namespace entfact
