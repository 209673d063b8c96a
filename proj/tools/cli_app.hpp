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
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entfact/circuits.hpp"

namespace entfact::cli {

struct CampaignConfig {
  std::string law;  // factorization|dual|eigen|mixed-bound|two-sided|concat
  int trials = 1000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::string format = "csv";  // csv|json
  // When set, pins the (first) channel of every trial instead of sampling.
  std::optional<std::string> channel_spec;
};

struct TrialReport {
  int trial_index = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> inputs;
  double metric = 0.0;
  bool passed = true;
};

struct CampaignResult {
  std::vector<TrialReport> reports;
  double max_abs_metric = 0.0;
  bool all_passed = true;
};

struct SweepConfig {
  std::string family;  // amplitude-damping|phase-flip
  double gamma_rate = 1.0;
  double t_max = 1.0;
  int steps = 10;                 // rows = steps + 1, t_k = k*t_max/steps
  std::string initial = "chi:0.5";  // state spec for rho_0
  std::string format = "csv";
};

struct ThresholdConfig {
  std::string family;  // amplitude-damping|phase-flip|depolarizing
  std::string side = "one";  // one|two
  double tolerance = 1e-9;
};

// Builtin name:param ("amplitude-damping:0.3", "identity", ...) or a path
// to a channel JSON file.
KrausChannel parse_channel_spec(const std::string& spec);

// "phi_plus", "chi:X", "maximally_mixed", or a path to a 4x4 [re,im] JSON
// density matrix (bare array, or an object with a "state" field as emitted
// by the choi command).
DensityMatrix parse_state_spec(const std::string& spec);

CampaignResult run_campaign(const CampaignConfig& cfg);

// Command entry points; each writes its report to `out` and returns the
// process exit code (0 ok, 1 trial failures, 2 hard errors are thrown).
int cmd_concurrence(const std::string& state_spec, std::ostream& out);
int cmd_choi(const std::string& channel_spec, std::ostream& out);
int cmd_verify_law(const CampaignConfig& cfg, std::ostream& out);
int cmd_sweep(const SweepConfig& cfg, std::ostream& out);
int cmd_threshold(const ThresholdConfig& cfg, std::ostream& out);
int cmd_swap_demo(double omega, const std::string& channel_spec,
                  std::ostream& out);

}  // namespace entfact::cli
