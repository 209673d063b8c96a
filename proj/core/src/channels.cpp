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

#include "entfact/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <json.hpp>

#include "entfact/errors.hpp"
#include "entfact/rng.hpp"

namespace entfact {

namespace {

void require_unit_interval(double x, const char* who) {
  if (!(x >= 0.0 && x <= 1.0))
    throw OutOfRangeError(std::string(who) + ": parameter must be in [0,1]");
}

ComplexMatrix completeness_sum(const KrausChannel& ch) {
  ComplexMatrix t(2, 2);
  for (const auto& k : ch.kraus) t += k.dagger() * k;
  return t;
}

}  // namespace

KrausChannel identity_channel() {
  return KrausChannel{{ComplexMatrix::identity(2)}, true};
}

KrausChannel make_amplitude_damping(double gamma) {
  require_unit_interval(gamma, "make_amplitude_damping");
  ComplexMatrix k0(2, 2, {1.0, 0.0, 0.0, std::sqrt(1.0 - gamma)});
  ComplexMatrix k1(2, 2, {0.0, std::sqrt(gamma), 0.0, 0.0});
  return KrausChannel{{std::move(k0), std::move(k1)}, true};
}

KrausChannel make_phase_flip(double p) {
  require_unit_interval(p, "make_phase_flip");
  ComplexMatrix k0 = std::sqrt(1.0 - p) * ComplexMatrix::identity(2);
  ComplexMatrix k1 = std::sqrt(p) * pauli_z();
  return KrausChannel{{std::move(k0), std::move(k1)}, true};
}

KrausChannel make_depolarizing(double p) {
  require_unit_interval(p, "make_depolarizing");
  KrausChannel ch;
  ch.kraus.push_back(std::sqrt(1.0 - 0.75 * p) * ComplexMatrix::identity(2));
  ch.kraus.push_back(std::sqrt(0.25 * p) * pauli_x());
  ch.kraus.push_back(std::sqrt(0.25 * p) * pauli_y());
  ch.kraus.push_back(std::sqrt(0.25 * p) * pauli_z());
  ch.trace_preserving = true;
  return ch;
}

KrausChannel make_filter(double omega) {
  require_unit_interval(omega, "make_filter");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2, {std::sqrt(omega) * inv_sqrt2, 0.0, 0.0,
                         std::sqrt(1.0 - omega) * inv_sqrt2});
  return KrausChannel{{std::move(m)}, false};
}

KrausChannel random_channel(std::uint64_t seed, int kraus_rank) {
  if (kraus_rank < 1 || kraus_rank > 4)
    throw OutOfRangeError("random_channel: kraus_rank must be in 1..4");
  SplitMix64 g(seed);
  const int rows = 2 * kraus_rank;

  // Two Gaussian columns, orthonormalized (modified Gram-Schmidt with one
  // re-orthogonalization pass). Positive normalization fixes the phase
  // gauge, so the column pair is a Haar isometry C^2 -> C^2 (x) C^rank.
  std::vector<std::vector<Complex>> col(2, std::vector<Complex>(rows));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < rows; ++i) col[j][i] = g.next_complex_gaussian();

  auto dot = [rows](const std::vector<Complex>& a,
                    const std::vector<Complex>& b) {
    Complex s = 0.0;
    for (int i = 0; i < rows; ++i) s += std::conj(a[i]) * b[i];
    return s;
  };
  auto normalize = [&](std::vector<Complex>& v) {
    const double n = std::sqrt(dot(v, v).real());
    for (auto& e : v) e *= 1.0 / n;
  };

  normalize(col[0]);
  for (int pass = 0; pass < 2; ++pass) {
    const Complex proj = dot(col[0], col[1]);
    for (int i = 0; i < rows; ++i) col[1][i] -= proj * col[0][i];
  }
  normalize(col[1]);

  KrausChannel ch;
  ch.trace_preserving = true;
  for (int e = 0; e < kraus_rank; ++e) {
    ComplexMatrix k(2, 2);
    for (int s = 0; s < 2; ++s)
      for (int in = 0; in < 2; ++in) k(s, in) = col[in][e * 2 + s];
    ch.kraus.push_back(std::move(k));
  }
  return ch;
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  KrausChannel out;
  out.trace_preserving = second.trace_preserving && first.trace_preserving;
  for (const auto& k2 : second.kraus)
    for (const auto& k1 : first.kraus) out.kraus.push_back(k2 * k1);
  return out;
}

ApplicationResult apply_one_sided(const KrausChannel& ch,
                                  const DensityMatrix& rho, Side side) {
  if (rho.mat.rows() != 4 || rho.mat.cols() != 4)
    throw DimensionMismatchError("apply_one_sided: need a 4x4 state");
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  ComplexMatrix sigma(4, 4);
  for (const auto& k : ch.kraus) {
    const ComplexMatrix a = (side == Side::Left) ? kron(k, id2) : kron(id2, k);
    sigma += a * rho.mat * a.dagger();
  }
  const double prob = sigma.trace().real();
  if (prob <= kZeroProbCutoff)
    throw ZeroProbabilityError("apply_one_sided: channel annihilated the state");
  sigma *= Complex(1.0 / prob, 0.0);
  return ApplicationResult{DensityMatrix{hermitize(sigma), rho.sides}, prob};
}

ApplicationResult apply_two_sided(const KrausChannel& ch_left,
                                  const KrausChannel& ch_right,
                                  const DensityMatrix& rho) {
  const ApplicationResult first = apply_one_sided(ch_left, rho, Side::Left);
  ApplicationResult second =
      apply_one_sided(ch_right, first.state, Side::Right);
  second.prob *= first.prob;
  return second;
}

Validation validate_channel(const KrausChannel& ch) {
  if (ch.kraus.empty()) return {false, "empty Kraus list"};
  for (const auto& k : ch.kraus) {
    if (k.rows() != 2 || k.cols() != 2)
      return {false, "Kraus operator is not 2x2"};
    if (!k.all_finite()) return {false, "non-finite Kraus entry"};
  }
  const ComplexMatrix t = completeness_sum(ch);
  const Spectrum s = eig_hermitian(hermitize(t), false);
  if (s.values.front() > 1.0 + kCompletenessTol)
    return {false, "completeness exceeded (max eig of sum K†K is " +
                       std::to_string(s.values.front()) + ")"};
  if (ch.trace_preserving) {
    const double dev = max_abs_diff(t, ComplexMatrix::identity(2));
    if (dev > kCompletenessTol)
      return {false,
              "trace preservation violated by " + std::to_string(dev)};
  }
  return {true, ""};
}

std::string channel_to_json(const KrausChannel& ch, const std::string& name) {
  nlohmann::json j;
  j["name"] = name;
  j["trace_preserving"] = ch.trace_preserving;
  auto& ops = j["kraus"] = nlohmann::json::array();
  for (const auto& k : ch.kraus) {
    nlohmann::json mat = nlohmann::json::array();
    for (int r = 0; r < 2; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < 2; ++c)
        row.push_back({k(r, c).real(), k(r, c).imag()});
      mat.push_back(std::move(row));
    }
    ops.push_back(std::move(mat));
  }
  return j.dump(2);
}

KrausChannel channel_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("channel_from_json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array() ||
      j["kraus"].empty())
    throw ParseError("channel_from_json: missing or empty \"kraus\" array");
  KrausChannel ch;
  ch.trace_preserving = j.value("trace_preserving", true);
  for (const auto& mat : j["kraus"]) {
    if (!mat.is_array() || mat.size() != 2)
      throw ParseError("channel_from_json: Kraus operator is not 2x2");
    ComplexMatrix k(2, 2);
    for (int r = 0; r < 2; ++r) {
      if (!mat[r].is_array() || mat[r].size() != 2)
        throw ParseError("channel_from_json: Kraus operator is not 2x2");
      for (int c = 0; c < 2; ++c) {
        const auto& pair = mat[r][c];
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number() || !pair[1].is_number())
          throw ParseError("channel_from_json: entry is not a [re,im] pair");
        k(r, c) = Complex(pair[0].get<double>(), pair[1].get<double>());
      }
    }
    ch.kraus.push_back(std::move(k));
  }
  return ch;
}

}  // namespace entfact
