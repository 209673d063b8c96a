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

#include <doctest.h>

#include <cmath>

#include "entfact/duality.hpp"
#include "entfact/entanglement.hpp"
#include "entfact/errors.hpp"
#include "entfact/rng.hpp"
#include "oracles.hpp"

using namespace entfact;

TEST_SUITE("entanglement") {

TEST_CASE("concurrence of the reference states") {
  CHECK(std::abs(concurrence(density_from_pure(bell_phi_plus())) - 1.0) <=
        1e-10);
  const DensityMatrix mm{0.25 * ComplexMatrix::identity(4), {1, 1}};
  CHECK(concurrence(mm) <= 1e-12);
}

TEST_CASE("concurrence of chi follows 2 sqrt(w(1-w)) on the grid") {
  for (int k = 0; k <= 10; ++k) {
    const double w = k / 10.0;
    const double expected = 2.0 * std::sqrt(w * (1.0 - w));
    const double got = concurrence(density_from_pure(pure_chi(w)));
    CHECK(std::abs(got - expected) <= 1e-10);
  }
}

TEST_CASE("Werner state at p = 0.5 has concurrence 1/4") {
  CHECK(std::abs(concurrence(testutil::werner_state(0.5)) - 0.25) <= 1e-10);
  // closed form max{0, 1 - 3p/2} against the X-state oracle on a grid
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    const DensityMatrix w = testutil::werner_state(p);
    const double expected = std::max(0.0, 1.0 - 1.5 * p);
    CHECK(std::abs(concurrence(w) - expected) <= 1e-10);
    CHECK(std::abs(testutil::xstate_concurrence(w.mat) - expected) <= 1e-12);
  }
}

TEST_CASE("concurrence rejects invalid states") {
  ComplexMatrix bad(4, 4);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  CHECK_THROWS_AS(concurrence(DensityMatrix{bad, {1, 1}}), InvalidStateError);
  CHECK_THROWS_AS(concurrence(DensityMatrix{ComplexMatrix::identity(2), {1, 0}}),
                  InvalidStateError);
}

TEST_CASE("hermitian-route spectrum matches the characteristic polynomial") {
  // The implementation diagonalizes sqrt(rho) rho~ sqrt(rho); the oracle
  // finds the roots of det(rho rho~ - x) directly.
  for (int seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_mixed(seed * 13 + 1, 3 + seed % 2);
    const Spectrum s = wootters_spectrum(rho);
    const auto roots = testutil::wootters_spectrum_charpoly(rho.mat);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(s.values[i] - roots[i]) <= 1e-8);
  }
}

TEST_CASE("concurrence_pure closed form") {
  CHECK(std::abs(concurrence_pure(pure_chi(0.5)) - 1.0) <= 1e-12);
  CHECK(concurrence_pure(pure_chi(1.0)) == 0.0);
  for (int seed = 0; seed < 1000; ++seed) {
    const PureState psi = random_pure(seed);
    const double via_density = concurrence(density_from_pure(psi));
    CHECK(std::abs(concurrence_pure(psi) - via_density) <= 1e-10);
  }
}

TEST_CASE("factorization residual vanishes for the identity channel") {
  for (int seed = 0; seed < 100; ++seed) {
    CHECK(factorization_residual(identity_channel(), random_pure(seed)) <=
          1e-12);
  }
}

TEST_CASE("amplitude damping scales chi concurrence by sqrt(1-gamma)") {
  for (int kg = 0; kg <= 10; ++kg) {
    const double gamma = kg / 10.0;
    const KrausChannel ch = make_amplitude_damping(gamma);
    for (int kw = 0; kw <= 10; ++kw) {
      const double w = kw / 10.0;
      const double expected =
          std::sqrt(1.0 - gamma) * 2.0 * std::sqrt(w * (1.0 - w));
      const double c_out = output_concurrence(
          ch, density_from_pure(pure_chi(w)), Side::Right);
      CHECK(std::abs(c_out - expected) <= 1e-10);
      CHECK(factorization_residual(ch, pure_chi(w)) <= 1e-10);
    }
  }
}

TEST_CASE("factorization survives near-rank-drop channel parameters") {
  // spectra of rho*rho_tilde develop eigenvalue ratios down to ~1e-12 here;
  // guards the noise-floor choice in `concurrence`
  for (double p : {1e-4, 1e-6, 1e-8, 0.5 - 1e-7, 0.5 + 1e-7})
    for (double w : {0.1, 0.5, 0.9})
      CHECK(factorization_residual(make_phase_flip(p), pure_chi(w)) <= 1e-9);
  for (double g : {1e-9, 1.0 - 1e-9})
    CHECK(factorization_residual(make_amplitude_damping(g), pure_chi(0.5)) <=
          1e-9);
}

TEST_CASE("factorization fuzz: random channels, random states") {
  double worst = 0.0;
  for (int i = 0; i < 600; ++i) {
    SplitMix64 g = SplitMix64::stream(808, i);
    const KrausChannel ch = random_channel(g.next_u64(), 1 + i % 4);
    const PureState psi = random_pure(g.next_u64());
    worst = std::max(worst, factorization_residual(ch, psi));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("factorization holds for non-trace-preserving filters") {
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    SplitMix64 g = SplitMix64::stream(909, i);
    const KrausChannel filt = make_filter(0.02 + 0.96 * g.next_double());
    const PureState psi = random_pure(g.next_u64());
    worst = std::max(worst, factorization_residual(filt, psi));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("factorization zero-probability semantics") {
  // filter(1) annihilates |01>: a product state, so both sides vanish
  const PureState e01{ComplexMatrix::column({0.0, 1.0, 0.0, 0.0})};
  CHECK(factorization_residual(make_filter(1.0), e01) == 0.0);

  // a zero channel annihilates everything; entangled input is an error
  KrausChannel zero;
  zero.kraus.push_back(ComplexMatrix(2, 2));
  zero.trace_preserving = false;
  CHECK_THROWS_AS(factorization_residual(zero, bell_phi_plus()),
                  ZeroProbabilityError);
}

TEST_CASE("mixed bound is tight for rank-one states") {
  for (int i = 0; i < 50; ++i) {
    SplitMix64 g = SplitMix64::stream(112, i);
    const KrausChannel ch = random_channel(g.next_u64(), 1 + i % 4);
    const BoundReport r = mixed_bound_margin(ch, random_mixed(g.next_u64(), 1));
    CHECK(std::abs(r.margin) <= 1e-9);
    CHECK(r.passed);
  }
}

TEST_CASE("mixed bound trivially saturates on separable input") {
  const DensityMatrix mm{0.25 * ComplexMatrix::identity(4), {1, 1}};
  const BoundReport r = mixed_bound_margin(make_amplitude_damping(0.3), mm);
  CHECK(r.lhs <= 1e-12);
  CHECK(r.rhs <= 1e-12);
}

TEST_CASE("mixed bound fuzz over ranks 2..4") {
  for (int i = 0; i < 600; ++i) {
    SplitMix64 g = SplitMix64::stream(113, i);
    const KrausChannel ch = random_channel(g.next_u64(), 1 + i % 4);
    const DensityMatrix rho = random_mixed(g.next_u64(), 2 + i % 3);
    CHECK(mixed_bound_margin(ch, rho).passed);
  }
}

TEST_CASE("two-sided bound basics and fuzz") {
  const BoundReport id = two_sided_margin(identity_channel(),
                                          identity_channel(),
                                          density_from_pure(random_pure(1)));
  CHECK(std::abs(id.margin) <= 1e-9);

  for (int i = 0; i < 400; ++i) {
    SplitMix64 g = SplitMix64::stream(114, i);
    const KrausChannel c1 = random_channel(g.next_u64(), 1 + i % 4);
    const KrausChannel c2 = random_channel(g.next_u64(), 1 + (i / 4) % 4);
    const DensityMatrix rho = random_mixed(g.next_u64(), 1 + i % 4);
    CHECK(two_sided_margin(c1, c2, rho).passed);
  }
}

TEST_CASE("one-sided depolarizing at 2/3 certifies sudden death") {
  const KrausChannel dep = make_depolarizing(2.0 / 3.0);
  for (int seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = random_mixed(seed, 1 + seed % 4);
    const BoundReport r = two_sided_margin(dep, identity_channel(), rho);
    CHECK(r.rhs <= 1e-10);
    CHECK(r.lhs <= 1e-9);
  }
}

TEST_CASE("concatenation bound with an identity factor is tight") {
  for (int seed = 0; seed < 30; ++seed) {
    const KrausChannel ch = random_channel(seed, 1 + seed % 4);
    const BoundReport r = concat_margin(identity_channel(), ch);
    CHECK(std::abs(r.margin) <= 1e-10);
  }
}

TEST_CASE("amplitude damping then dephasing achieves equality") {
  for (double gamma : {0.1, 0.36, 0.7}) {
    for (double p : {0.05, 0.2, 0.45}) {
      const BoundReport r =
          concat_margin(make_phase_flip(p), make_amplitude_damping(gamma));
      const double expected = std::sqrt(1.0 - gamma) * std::abs(1.0 - 2.0 * p);
      CHECK(std::abs(r.lhs - expected) <= 1e-9);
      CHECK(std::abs(r.rhs - expected) <= 1e-9);
      CHECK(std::abs(r.margin) <= 1e-9);
    }
  }
}

TEST_CASE("concatenation fuzz over random channel pairs") {
  for (int i = 0; i < 400; ++i) {
    SplitMix64 g = SplitMix64::stream(115, i);
    const KrausChannel c1 = random_channel(g.next_u64(), 1 + i % 4);
    const KrausChannel c2 = random_channel(g.next_u64(), 1 + (i / 4) % 4);
    CHECK(concat_margin(c2, c1).passed);
  }
}

TEST_CASE("concurrence is within [0,1] and locally unitary invariant") {
  for (int i = 0; i < 500; ++i) {
    SplitMix64 g = SplitMix64::stream(116, i);
    const DensityMatrix rho = random_mixed(g.next_u64(), 1 + i % 4);
    const double c = concurrence(rho);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0 + 1e-12);

    const ComplexMatrix u = testutil::random_unitary(g, 2);
    const ComplexMatrix v = testutil::random_unitary(g, 2);
    const ComplexMatrix uv = kron(u, v);
    const DensityMatrix rotated{hermitize(uv * rho.mat * uv.dagger()), {1, 1}};
    CHECK(std::abs(concurrence(rotated) - c) <= 1e-9);
  }
}

TEST_CASE("one-sided TP channels never increase concurrence") {
  for (int i = 0; i < 300; ++i) {
    SplitMix64 g = SplitMix64::stream(117, i);
    const KrausChannel ch = random_channel(g.next_u64(), 1 + i % 4);
    const DensityMatrix rho = random_mixed(g.next_u64(), 1 + i % 4);
    const double before = concurrence(rho);
    const double after = output_concurrence(ch, rho, Side::Right);
    CHECK(after <= before + 1e-9);
  }
}

TEST_CASE("wootters spectra stay above the roundoff floor") {
  for (int i = 0; i < 300; ++i) {
    SplitMix64 g = SplitMix64::stream(118, i);
    DensityMatrix rho = random_mixed(g.next_u64(), 1 + i % 4);
    if (i % 2) {
      const KrausChannel ch = random_channel(g.next_u64(), 1 + i % 4);
      rho = apply_one_sided(ch, rho, Side::Right).state;
    }
    const Spectrum s = wootters_spectrum(rho);
    for (double xi : s.values) CHECK(xi >= -1e-10);
  }
}

TEST_CASE("disentanglement thresholds of the builtin families") {
  const auto depol = [](double x) { return make_depolarizing(x); };
  const auto pf = [](double x) { return make_phase_flip(x); };
  const auto ad = [](double x) { return make_amplitude_damping(x); };

  CHECK(std::abs(disentanglement_threshold(depol, SideConfig::OneSided, 1e-6) -
                 2.0 / 3.0) <= 1e-6);
  CHECK(std::abs(disentanglement_threshold(depol, SideConfig::TwoSided, 1e-6) -
                 2.0 / 3.0) <= 1e-6);
  CHECK(std::abs(disentanglement_threshold(pf, SideConfig::OneSided, 1e-6) -
                 0.5) <= 1e-6);
  CHECK(std::abs(disentanglement_threshold(ad, SideConfig::OneSided, 1e-6) -
                 1.0) <= 1e-6);
}

TEST_CASE("threshold search error modes") {
  // probe concurrence sqrt(0.5 + 0.5x) increases before any zero
  const auto rising = [](double x) {
    return make_amplitude_damping(0.5 * (1.0 - x));
  };
  CHECK_THROWS_AS(
      disentanglement_threshold(rising, SideConfig::OneSided, 1e-6),
      NotMonotonicError);

  // capped depolarizing never disentangles on [0,1]
  const auto weak = [](double x) { return make_depolarizing(0.5 * x); };
  CHECK_THROWS_AS(disentanglement_threshold(weak, SideConfig::OneSided, 1e-6),
                  NoRootError);
}

}  // TEST_SUITE
