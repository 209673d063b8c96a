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

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli_app.hpp"
#include "entfact/errors.hpp"

int main(int argc, char** argv) {
  using namespace entfact::cli;

  CLI::App app{"Two-qubit entanglement decay toolkit: concurrence, Kraus "
               "channels, channel-state duality and the factorization law"};
  app.require_subcommand(1);

  std::string state_spec = "phi_plus";
  auto* conc = app.add_subcommand(
      "concurrence", "Wootters concurrence of a state (builtin or JSON file)");
  conc->add_option("state", state_spec,
                   "phi_plus | chi:W | maximally_mixed | FILE");

  std::string channel_spec = "identity";
  auto* choi = app.add_subcommand("choi", "Choi state of a channel as JSON");
  choi->add_option("--channel", channel_spec, "NAME:PARAM | identity | FILE");

  CampaignConfig vcfg;
  vcfg.law = "factorization";
  std::string pinned_channel;
  auto* verify = app.add_subcommand(
      "verify-law",
      "Seeded verification campaign; factorization additionally appends the "
      "101-point omega grid after the random trials");
  verify
      ->add_option("--law", vcfg.law,
                   "factorization|dual|eigen|mixed-bound|two-sided|concat")
      ->check(CLI::IsMember({"factorization", "dual", "eigen", "mixed-bound",
                             "two-sided", "concat"}));
  verify->add_option("--trials", vcfg.trials, "number of random trials");
  verify->add_option("--seed", vcfg.seed, "base seed");
  verify->add_option("--tolerance", vcfg.tolerance, "pass tolerance");
  verify->add_option("--format", vcfg.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--channel", pinned_channel,
                     "pin the (first) channel instead of sampling");

  SweepConfig scfg;
  auto* sweep = app.add_subcommand(
      "sweep", "Decay curve C_choi(t), C_predicted, C_direct over a t-grid");
  sweep->add_option("--family", scfg.family, "amplitude-damping|phase-flip")
      ->required()
      ->check(CLI::IsMember({"amplitude-damping", "phase-flip"}));
  sweep->add_option("--gamma-rate", scfg.gamma_rate, "decay rate Gamma");
  sweep->add_option("--t-max", scfg.t_max, "end of the time grid");
  sweep->add_option("--steps", scfg.steps, "grid steps (steps+1 rows)");
  sweep->add_option("--initial", scfg.initial, "initial state spec");
  double sweep_omega = -1.0;
  sweep->add_option("--omega", sweep_omega,
                    "shorthand for --initial chi:OMEGA");
  sweep->add_option("--format", scfg.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  ThresholdConfig tcfg;
  auto* threshold = app.add_subcommand(
      "threshold", "Smallest parameter certifying disentanglement");
  threshold->add_option("--family", tcfg.family,
                        "amplitude-damping|phase-flip|depolarizing")
      ->required()
      ->check(CLI::IsMember(
          {"amplitude-damping", "phase-flip", "depolarizing"}));
  threshold->add_option("--side", tcfg.side, "one|two")
      ->check(CLI::IsMember({"one", "two"}));
  threshold->add_option("--tolerance", tcfg.tolerance, "bisection tolerance");

  double swap_omega = 0.5;
  std::string swap_channel = "identity";
  auto* swap = app.add_subcommand(
      "swap-demo", "Entanglement swapping against the direct channel action");
  swap->add_option("--omega", swap_omega, "Schmidt weight of chi");
  swap->add_option("--channel", swap_channel, "NAME:PARAM | identity | FILE");

  CLI11_PARSE(app, argc, argv);

  try {
    if (conc->parsed()) return cmd_concurrence(state_spec, std::cout);
    if (choi->parsed()) return cmd_choi(channel_spec, std::cout);
    if (verify->parsed()) {
      if (!pinned_channel.empty()) vcfg.channel_spec = pinned_channel;
      return cmd_verify_law(vcfg, std::cout);
    }
    if (sweep->parsed()) {
      if (sweep_omega >= 0.0) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "chi:%.17g", sweep_omega);
        scfg.initial = buf;
      }
      return cmd_sweep(scfg, std::cout);
    }
    if (threshold->parsed()) return cmd_threshold(tcfg, std::cout);
    if (swap->parsed()) return cmd_swap_demo(swap_omega, swap_channel, std::cout);
  } catch (const entfact::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
