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

#include "entfact/duality.hpp"

#include <cmath>
#include <utility>

#include "entfact/errors.hpp"

namespace entfact {

namespace {

constexpr double kKrausEigenCutoff = 1e-12;

void require_open_interval(double omega, const char* who) {
  if (!(omega > 0.0 && omega < 1.0))
    throw OutOfRangeError(std::string(who) +
                          ": omega must be in (0,1), the filter M is "
                          "singular at the endpoints");
}

}  // namespace

ChoiState choi_state(const KrausChannel& ch) {
  ApplicationResult r =
      apply_one_sided(ch, density_from_pure(bell_phi_plus()), Side::Right);
  return ChoiState{std::move(r.state), r.prob};
}

double dual_check(const KrausChannel& ch, double omega) {
  require_open_interval(omega, "dual_check");
  const ApplicationResult direct =
      apply_one_sided(ch, density_from_pure(pure_chi(omega)), Side::Right);
  const ChoiState cs = choi_state(ch);
  const ApplicationResult dual =
      apply_one_sided(make_filter(omega), cs.state, Side::Left);
  return max_abs_diff(direct.state.mat, dual.state.mat);
}

EigenProportionality eigen_proportionality(const KrausChannel& ch,
                                           double omega) {
  require_open_interval(omega, "eigen_proportionality");
  const ApplicationResult direct =
      apply_one_sided(ch, density_from_pure(pure_chi(omega)), Side::Right);
  const ChoiState cs = choi_state(ch);
  const ApplicationResult dual =
      apply_one_sided(make_filter(omega), cs.state, Side::Left);

  EigenProportionality report{wootters_spectrum(direct.state),
                              wootters_spectrum(cs.state), 0.0, 0.0};
  const double p = dual.prob;
  report.factor = omega * (1.0 - omega) / (4.0 * p * p);
  for (size_t i = 0; i < report.xi.values.size(); ++i) {
    report.residual =
        std::max(report.residual, std::abs(report.xi.values[i] -
                                           report.factor * report.mu.values[i]));
  }
  return report;
}

KrausChannel channel_from_choi(const ChoiState& cs) {
  if (cs.state.mat.rows() != 4 || cs.state.mat.cols() != 4)
    throw DimensionMismatchError("channel_from_choi: need a 4x4 Choi state");
  // 2 p'' rho_$ = sum_ij |i><j| (x) $(|i><j|); its eigenvectors, reshaped
  // with the left qubit as the input index, are the Kraus operators.
  ComplexMatrix c = (2.0 * cs.prob) * cs.state.mat;
  const Spectrum s = eig_hermitian(hermitize(c), true);
  KrausChannel ch;
  for (int k = 0; k < 4; ++k) {
    const double lam = s.values[k];
    if (lam < -1e-10)
      throw NotPSDError("channel_from_choi: Choi eigenvalue " +
                        std::to_string(lam));
    if (lam <= kKrausEigenCutoff) continue;
    const double w = std::sqrt(lam);
    ComplexMatrix op(2, 2);
    for (int in = 0; in < 2; ++in)
      for (int out = 0; out < 2; ++out)
        op(out, in) = w * (*s.vectors)(in * 2 + out, k);
    ch.kraus.push_back(std::move(op));
  }
  if (ch.kraus.empty())
    throw NotPSDError("channel_from_choi: Choi matrix is zero");
  ComplexMatrix t(2, 2);
  for (const auto& k : ch.kraus) t += k.dagger() * k;
  ch.trace_preserving =
      max_abs_diff(t, ComplexMatrix::identity(2)) <= kCompletenessTol;
  return ch;
}

}  // namespace entfact
