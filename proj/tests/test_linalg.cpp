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

#include "entfact/errors.hpp"
#include "entfact/linalg.hpp"
#include "entfact/rng.hpp"
#include "oracles.hpp"

using namespace entfact;

namespace {

ComplexMatrix random_hermitian(SplitMix64& g, int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g.next_complex_gaussian();
  return hermitize(m);
}

ComplexMatrix reconstruct(const Spectrum& s) {
  const ComplexMatrix& v = *s.vectors;
  const int n = v.rows();
  ComplexMatrix out(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) += s.values[k] * v(i, k) * std::conj(v(j, k));
  return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("kron of identities is the identity") {
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(kron(id2, id2), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("kron(sigma_y, sigma_y) is the anti-diagonal (-1,1,1,-1)") {
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  ComplexMatrix expected(4, 4);
  expected(0, 3) = -1.0;
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  expected(3, 0) = -1.0;
  CHECK(max_abs_diff(yy, expected) == 0.0);
}

TEST_CASE("kron with a diagonal left factor replicates the diagonal") {
  ComplexMatrix d(2, 2, {Complex(3.0, 0), 0.0, 0.0, Complex(7.0, 0)});
  const ComplexMatrix out = kron(d, ComplexMatrix::identity(2));
  ComplexMatrix expected(4, 4);
  expected(0, 0) = 3.0;
  expected(1, 1) = 3.0;
  expected(2, 2) = 7.0;
  expected(3, 3) = 7.0;
  CHECK(max_abs_diff(out, expected) == 0.0);
}

TEST_CASE("kron is associative entrywise on exact inputs") {
  const ComplexMatrix a = pauli_x();
  const ComplexMatrix b = pauli_y();
  const ComplexMatrix c = pauli_z();
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) == 0.0);
}

TEST_CASE("eig_hermitian on a diagonal matrix sorts descending") {
  ComplexMatrix d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const Spectrum s = eig_hermitian(d);
  REQUIRE(s.values.size() == 3);
  CHECK(s.values[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s.values[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.values[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian of sigma_y is {1, -1}") {
  const Spectrum s = eig_hermitian(pauli_y());
  CHECK(std::abs(s.values[0] - 1.0) <= 1e-12);
  CHECK(std::abs(s.values[1] + 1.0) <= 1e-12);
  CHECK(max_abs_diff(reconstruct(s), pauli_y()) <= 1e-10);
}

TEST_CASE("eig_hermitian of the Bell projector is rank one") {
  const DensityMatrix bell = density_from_pure(bell_phi_plus());
  const Spectrum s = eig_hermitian(bell.mat);
  CHECK(std::abs(s.values[0] - 1.0) <= 1e-12);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(s.values[i]) <= 1e-12);
}

TEST_CASE("eig_hermitian rejects non-hermitian input") {
  ComplexMatrix m(2, 2, {0.0, 1.0, 0.0, 0.0});
  CHECK_THROWS_AS(eig_hermitian(m), NotHermitianError);
}

TEST_CASE("eig_hermitian rejects non-square input") {
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix(2, 3)), DimensionMismatchError);
}

TEST_CASE("random hermitian matrices reconstruct and transform correctly") {
  for (int trial = 0; trial < 100; ++trial) {
    SplitMix64 g = SplitMix64::stream(991, trial);
    const ComplexMatrix h = random_hermitian(g, 4);
    const Spectrum s = eig_hermitian(h);
    CHECK(max_abs_diff(reconstruct(s), h) <= 1e-9);

    // unitary conjugation preserves the sorted spectrum
    const ComplexMatrix u = testutil::random_unitary(g, 4);
    const Spectrum st = eig_hermitian(hermitize(u.dagger() * h * u), false);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(s.values[i] - st.values[i]) <= 1e-9);

    // eigenvector matrix is unitary
    const ComplexMatrix& v = *s.vectors;
    CHECK(max_abs_diff(v.dagger() * v, ComplexMatrix::identity(4)) <= 1e-10);
  }
}

TEST_CASE("sqrtm_psd identity and diagonal cases") {
  const ComplexMatrix id4 = ComplexMatrix::identity(4);
  CHECK(max_abs_diff(sqrtm_psd(id4), id4) <= 1e-12);

  ComplexMatrix d(4, 4);
  d(0, 0) = 4.0;
  d(1, 1) = 1.0;
  const ComplexMatrix s = sqrtm_psd(d);
  ComplexMatrix expected(4, 4);
  expected(0, 0) = 2.0;
  expected(1, 1) = 1.0;
  CHECK(max_abs_diff(s, expected) <= 1e-12);
}

TEST_CASE("sqrtm_psd of a projector is the projector") {
  const DensityMatrix bell = density_from_pure(bell_phi_plus());
  const ComplexMatrix s = sqrtm_psd(bell.mat);
  CHECK(max_abs_diff(s, bell.mat) <= 1e-10);
  CHECK(max_abs_diff(s * s, bell.mat) <= 1e-9);
}

TEST_CASE("sqrtm_psd squares back and commutes on random PSD input") {
  for (int trial = 0; trial < 100; ++trial) {
    SplitMix64 g = SplitMix64::stream(4242, trial);
    ComplexMatrix a(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = g.next_complex_gaussian();
    ComplexMatrix h = hermitize(a * a.dagger());
    h *= Complex(1.0 / h.trace().real(), 0.0);
    const ComplexMatrix s = sqrtm_psd(h);
    CHECK(max_abs_diff(s * s, h) <= 1e-9);
    CHECK(max_abs_diff(s * h, h * s) <= 1e-9);
  }
}

TEST_CASE("sqrtm_psd rejects indefinite input") {
  ComplexMatrix d(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -0.5;
  CHECK_THROWS_AS(sqrtm_psd(d), NotPSDError);
}

TEST_CASE("partial trace of the Bell projector is maximally mixed") {
  const DensityMatrix bell = density_from_pure(bell_phi_plus());
  const ComplexMatrix left = partial_trace(bell.mat, {2, 2}, {0});
  CHECK(max_abs_diff(left, 0.5 * ComplexMatrix::identity(2)) <= 1e-12);
  const ComplexMatrix right = partial_trace(bell.mat, {2, 2}, {1});
  CHECK(max_abs_diff(right, 0.5 * ComplexMatrix::identity(2)) <= 1e-12);
}

TEST_CASE("partial trace of a product state returns the kept factor") {
  SplitMix64 g(5);
  ComplexMatrix a(2, 2), b(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = g.next_complex_gaussian();
      b(i, j) = g.next_complex_gaussian();
    }
  ComplexMatrix ra = hermitize(a * a.dagger());
  ra *= Complex(1.0 / ra.trace().real(), 0.0);
  ComplexMatrix rb = hermitize(b * b.dagger());
  rb *= Complex(1.0 / rb.trace().real(), 0.0);
  CHECK(max_abs_diff(partial_trace(kron(ra, rb), {2, 2}, {0}), ra) <= 1e-12);
  CHECK(max_abs_diff(partial_trace(kron(ra, rb), {2, 2}, {1}), rb) <= 1e-12);
}

TEST_CASE("partial trace preserves the trace") {
  SplitMix64 g(77);
  ComplexMatrix m(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = g.next_complex_gaussian();
  const ComplexMatrix h = hermitize(m);
  const ComplexMatrix reduced = partial_trace(h, {2, 2, 2}, {1});
  CHECK(std::abs(reduced.trace() - h.trace()) <= 1e-12);
}

TEST_CASE("partial trace dimension checks") {
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), {2, 3}, {0}),
                  DimensionMismatchError);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), {2, 2}, {2}),
                  DimensionMismatchError);
}

TEST_CASE("matrix constructor validates the entry count") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0}), DimensionMismatchError);
}

}  // TEST_SUITE
