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

#include "entfact/circuits.hpp"

#include <cmath>
#include <vector>

#include "entfact/errors.hpp"

namespace entfact {

namespace {

int qubit_count(int dim, const char* who) {
  int n = 0;
  int d = dim;
  while (d > 1 && d % 2 == 0) {
    d /= 2;
    ++n;
  }
  if (d != 1 || n < 2 || n > 4)
    throw DimensionMismatchError(std::string(who) +
                                 ": need 2..4 qubits, got dimension " +
                                 std::to_string(dim));
  return n;
}

void check_pair(int n, int qa, int qb, const char* who) {
  if (qa == qb || qa < 0 || qb < 0 || qa >= n || qb >= n)
    throw DimensionMismatchError(std::string(who) + ": bad qubit pair");
}

// The <phi+|-on-(qa,qb) projector as a 2^(n-2) x 2^n matrix row map: output
// basis index r (remaining qubits, original order) gathers the two inputs
// with equal bits b on (qa, qb), weight 1/sqrt(2). Qubit 0 is the most
// significant bit.
struct BellRowMap {
  int out_dim;
  // per output index: the two source indices (b=0, b=1)
  std::vector<std::pair<int, int>> sources;
};

BellRowMap bell_rows(int n, int qa, int qb) {
  BellRowMap map;
  map.out_dim = 1 << (n - 2);
  map.sources.reserve(map.out_dim);
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (q != qa && q != qb) rest.push_back(q);
  auto bitpos = [n](int q) { return n - 1 - q; };
  for (int r = 0; r < map.out_dim; ++r) {
    int base = 0;
    for (size_t k = 0; k < rest.size(); ++k) {
      const int bit = (r >> (rest.size() - 1 - k)) & 1;
      base |= bit << bitpos(rest[k]);
    }
    const int src0 = base;
    const int src1 = base | (1 << bitpos(qa)) | (1 << bitpos(qb));
    map.sources.emplace_back(src0, src1);
  }
  return map;
}

Sides sides_for_qubits(int n) { return Sides{(n + 1) / 2, n / 2}; }

}  // namespace

PureOutcome bell_project(const PureState& joint, int qa, int qb) {
  const int n = qubit_count(joint.vec.rows(), "bell_project");
  check_pair(n, qa, qb, "bell_project");
  const BellRowMap map = bell_rows(n, qa, qb);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  ComplexMatrix w(map.out_dim, 1);
  double norm2 = 0.0;
  for (int r = 0; r < map.out_dim; ++r) {
    w(r, 0) = inv_sqrt2 *
              (joint.vec(map.sources[r].first, 0) +
               joint.vec(map.sources[r].second, 0));
    norm2 += std::norm(w(r, 0));
  }
  if (norm2 <= kZeroProbCutoff)
    throw ZeroProbabilityError("bell_project: outcome has zero probability");
  w *= Complex(1.0 / std::sqrt(norm2), 0.0);
  return PureOutcome{PureState{std::move(w)}, norm2};
}

MixedOutcome bell_project(const DensityMatrix& joint, int qa, int qb) {
  const int n = qubit_count(joint.mat.rows(), "bell_project");
  if (joint.mat.cols() != joint.mat.rows())
    throw DimensionMismatchError("bell_project: state is not square");
  check_pair(n, qa, qb, "bell_project");
  const BellRowMap map = bell_rows(n, qa, qb);

  ComplexMatrix out(map.out_dim, map.out_dim);
  for (int r = 0; r < map.out_dim; ++r) {
    const auto [r0, r1] = map.sources[r];
    for (int c = 0; c < map.out_dim; ++c) {
      const auto [c0, c1] = map.sources[c];
      out(r, c) = 0.5 * (joint.mat(r0, c0) + joint.mat(r0, c1) +
                         joint.mat(r1, c0) + joint.mat(r1, c1));
    }
  }
  const double prob = out.trace().real();
  if (prob <= kZeroProbCutoff)
    throw ZeroProbabilityError("bell_project: outcome has zero probability");
  out *= Complex(1.0 / prob, 0.0);
  return MixedOutcome{DensityMatrix{hermitize(out), sides_for_qubits(n - 2)},
                      prob};
}

PureOutcome teleport_identity(const PureState& psi) {
  if (psi.vec.rows() != 2)
    throw DimensionMismatchError("teleport_identity: need a single qubit");
  const PureState joint{kron(psi.vec, bell_phi_plus().vec)};
  return bell_project(joint, 0, 1);
}

MixedOutcome entanglement_swap(double omega, const KrausChannel& ch) {
  if (!(omega >= 0.0 && omega <= 1.0))
    throw OutOfRangeError("entanglement_swap: omega must be in [0,1]");
  const DensityMatrix chi = density_from_pure(pure_chi(omega));
  const ChoiState cs = choi_state(ch);
  // rho_$ is mixed in general, so the register lives in the 16x16 picture.
  const DensityMatrix joint{kron(chi.mat, cs.state.mat), Sides{2, 2}};
  return bell_project(joint, 1, 2);
}

}  // namespace entfact
