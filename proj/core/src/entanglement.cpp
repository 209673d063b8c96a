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

#include "entfact/entanglement.hpp"

#include <cmath>
#include <string>

#include "entfact/errors.hpp"

namespace entfact {

namespace {

// Zero eigenvalues of rank-deficient rho * rho_tilde come back from the
// Jacobi route as noise of order 1e-16 relative to the leading eigenvalue
// (measured across pure and X-state outputs at every entanglement scale);
// taking their square roots would cost ~1e-8 of concurrence. Anything below
// the relative floor, or below absolute roundoff for all-zero spectra, is
// treated as an exact zero.
constexpr double kSpectrumRelFloor = 1e-13;
constexpr double kSpectrumAbsFloor = 1e-15;

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  return yy * rho.conjugate() * yy;
}

BoundReport make_report(double lhs, double rhs) {
  const double margin = rhs - lhs;
  return BoundReport{lhs, rhs, margin, margin >= -kBoundSlack};
}

double weighted_choi_concurrence(const KrausChannel& ch, Side side) {
  return output_concurrence(ch, density_from_pure(bell_phi_plus()), side);
}

}  // namespace

Spectrum wootters_spectrum(const DensityMatrix& rho) {
  const ComplexMatrix s = sqrtm_psd(hermitize(rho.mat));
  const ComplexMatrix h = hermitize(s * spin_flip(rho.mat) * s);
  return eig_hermitian(h, false);
}

double concurrence(const DensityMatrix& rho) {
  if (rho.mat.rows() != 4 || rho.mat.cols() != 4)
    throw InvalidStateError("concurrence: need a two-qubit (4x4) state");
  const Validation v = validate_density(rho);
  if (!v.ok) throw InvalidStateError("concurrence: " + v.diagnostic);
  const Spectrum s = wootters_spectrum(rho);
  const double floor =
      std::max(kSpectrumAbsFloor, kSpectrumRelFloor * s.values[0]);
  auto root = [floor](double xi) { return xi < floor ? 0.0 : std::sqrt(xi); };
  const double c = root(s.values[0]) - root(s.values[1]) - root(s.values[2]) -
                   root(s.values[3]);
  return std::max(0.0, c);
}

double concurrence_pure(const PureState& psi) {
  if (psi.vec.rows() != 4)
    throw InvalidStateError("concurrence_pure: need a two-qubit state");
  const Complex a = psi.vec(0, 0);
  const Complex b = psi.vec(1, 0);
  const Complex c = psi.vec(2, 0);
  const Complex d = psi.vec(3, 0);
  return 2.0 * std::abs(a * d - b * c);
}

double output_concurrence(const KrausChannel& ch, const DensityMatrix& rho,
                          Side side) {
  const ApplicationResult out = apply_one_sided(ch, rho, side);
  return out.prob * concurrence(out.state);
}

double factorization_residual(const KrausChannel& ch, const PureState& psi) {
  const double c_in = concurrence_pure(psi);
  double c_out = 0.0;
  try {
    c_out = output_concurrence(ch, density_from_pure(psi), Side::Right);
  } catch (const ZeroProbabilityError&) {
    // A channel can only annihilate a product state (an entangled state has
    // full Schmidt support on the acted-on qubit), so both sides are zero.
    if (c_in < 1e-12) return 0.0;
    throw;
  }
  const double c_choi = weighted_choi_concurrence(ch, Side::Right);
  return std::abs(c_out - c_choi * c_in);
}

BoundReport mixed_bound_margin(const KrausChannel& ch,
                               const DensityMatrix& rho0) {
  const double lhs = output_concurrence(ch, rho0, Side::Right);
  const double rhs =
      weighted_choi_concurrence(ch, Side::Right) * concurrence(rho0);
  return make_report(lhs, rhs);
}

BoundReport two_sided_margin(const KrausChannel& ch1, const KrausChannel& ch2,
                             const DensityMatrix& rho0) {
  const ApplicationResult out = apply_two_sided(ch1, ch2, rho0);
  const double lhs = out.prob * concurrence(out.state);
  const double rhs = weighted_choi_concurrence(ch1, Side::Left) *
                     weighted_choi_concurrence(ch2, Side::Right) *
                     concurrence(rho0);
  return make_report(lhs, rhs);
}

BoundReport concat_margin(const KrausChannel& ch2, const KrausChannel& ch1) {
  const double lhs =
      weighted_choi_concurrence(compose(ch2, ch1), Side::Right);
  const double rhs = weighted_choi_concurrence(ch2, Side::Right) *
                     weighted_choi_concurrence(ch1, Side::Right);
  return make_report(lhs, rhs);
}

double disentanglement_threshold(const ChannelFamily& family,
                                 SideConfig side_config, double tol) {
  if (!(tol > 0.0)) throw OutOfRangeError("disentanglement_threshold: tol");

  // Right-hand side of the two-sided bound, up to the initial state's
  // concurrence: one Choi factor per acted-on side.
  auto bound = [&](double x) {
    const double c = weighted_choi_concurrence(family(x), Side::Right);
    return side_config == SideConfig::TwoSided ? c * c : c;
  };

  constexpr int kGridPoints = 101;
  double prev = bound(0.0);
  bool seen_zero = (prev <= 0.0);
  for (int i = 1; i < kGridPoints; ++i) {
    const double cur = bound(static_cast<double>(i) / (kGridPoints - 1));
    // Monotonicity matters only up to the first zero; past it the bound
    // already certifies disentanglement (|1-2p| style rebounds are fine).
    if (!seen_zero && cur > prev + 1e-12)
      throw NotMonotonicError(
          "disentanglement_threshold: probe concurrence increases before "
          "reaching zero");
    seen_zero = seen_zero || (cur <= 0.0);
    prev = cur;
  }
  if (!seen_zero)
    throw NoRootError(
        "disentanglement_threshold: bound never reaches zero on [0,1]");

  if (bound(0.0) <= 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (bound(mid) <= 0.0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace entfact
