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

#include "cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "entfact/errors.hpp"
#include "entfact/rng.hpp"

namespace entfact::cli {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_fixed12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_param(const std::string& spec, size_t colon) {
  try {
    return std::stod(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("bad parameter in spec: " + spec);
  }
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < rho.mat.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < rho.mat.cols(); ++c)
      row.push_back({rho.mat(r, c).real(), rho.mat(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  const nlohmann::json& rows =
      (j.is_object() && j.contains("state")) ? j["state"] : j;
  if (!rows.is_array() || rows.size() != 4)
    throw ParseError("density matrix must be a 4x4 array of [re,im] pairs");
  ComplexMatrix m(4, 4);
  for (int r = 0; r < 4; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4)
      throw ParseError("density matrix must be a 4x4 array of [re,im] pairs");
    for (int c = 0; c < 4; ++c) {
      const auto& pair = rows[r][c];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number())
        throw ParseError("density entry is not a [re,im] pair");
      m(r, c) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
  }
  return DensityMatrix{std::move(m), Sides{1, 1}};
}

// Time-parametrized families; the maps are chosen so the probe state's
// concurrence decays exponentially: sqrt(1-gamma(t)) = e^{-Gt/2} and
// |1-2p(t)| = e^{-Gt}.
KrausChannel family_at_time(const std::string& family, double gamma_rate,
                            double t) {
  const double decay = 1.0 - std::exp(-gamma_rate * t);
  if (family == "amplitude-damping") return make_amplitude_damping(decay);
  if (family == "phase-flip") return make_phase_flip(0.5 * decay);
  throw UnknownFamilyError("unknown sweep family: " + family);
}

ChannelFamily named_family(const std::string& family) {
  if (family == "amplitude-damping")
    return [](double x) { return make_amplitude_damping(x); };
  if (family == "phase-flip")
    return [](double x) { return make_phase_flip(x); };
  if (family == "depolarizing")
    return [](double x) { return make_depolarizing(x); };
  throw UnknownFamilyError("unknown threshold family: " + family);
}

void render_reports_csv(const CampaignConfig& cfg, const CampaignResult& res,
                        std::ostream& out) {
  out << "trial,seed,inputs,metric,passed\n";
  for (const auto& r : res.reports) {
    out << r.trial_index << ',' << r.seed << ",\"";
    for (size_t i = 0; i < r.inputs.size(); ++i) {
      if (i) out << ';';
      out << r.inputs[i].first << '=' << fmt_double(r.inputs[i].second);
    }
    out << "\"," << fmt_double(r.metric) << ',' << (r.passed ? 1 : 0) << '\n';
  }
  out << "# law=" << cfg.law << " trials=" << res.reports.size()
      << " max_abs_metric=" << fmt_double(res.max_abs_metric)
      << " all_passed=" << (res.all_passed ? 1 : 0) << '\n';
}

void render_reports_json(const CampaignConfig& cfg, const CampaignResult& res,
                         std::ostream& out) {
  nlohmann::json j;
  j["law"] = cfg.law;
  j["seed"] = cfg.seed;
  j["tolerance"] = cfg.tolerance;
  j["trials"] = res.reports.size();
  j["max_abs_metric"] = res.max_abs_metric;
  j["all_passed"] = res.all_passed;
  auto& reports = j["reports"] = nlohmann::json::array();
  for (const auto& r : res.reports) {
    nlohmann::json jr;
    jr["trial_index"] = r.trial_index;
    jr["seed"] = r.seed;
    auto& inputs = jr["inputs"] = nlohmann::json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    jr["metric"] = r.metric;
    jr["passed"] = r.passed;
    reports.push_back(std::move(jr));
  }
  out << j.dump(2) << '\n';
}

}  // namespace

KrausChannel parse_channel_spec(const std::string& spec) {
  if (spec == "identity") return identity_channel();
  const size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string name = spec.substr(0, colon);
    if (name == "amplitude-damping")
      return make_amplitude_damping(parse_param(spec, colon));
    if (name == "phase-flip") return make_phase_flip(parse_param(spec, colon));
    if (name == "depolarizing")
      return make_depolarizing(parse_param(spec, colon));
    if (name == "filter") return make_filter(parse_param(spec, colon));
  }
  KrausChannel ch = channel_from_json(read_file(spec));
  const Validation v = validate_channel(ch);
  if (!v.ok) throw ParseError("invalid channel in " + spec + ": " + v.diagnostic);
  return ch;
}

DensityMatrix parse_state_spec(const std::string& spec) {
  if (spec == "phi_plus") return density_from_pure(bell_phi_plus());
  if (spec == "maximally_mixed") {
    ComplexMatrix m = 0.25 * ComplexMatrix::identity(4);
    return DensityMatrix{std::move(m), Sides{1, 1}};
  }
  if (spec.rfind("chi:", 0) == 0)
    return density_from_pure(pure_chi(parse_param(spec, 3)));
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(spec));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("state file " + spec + ": " + e.what());
  }
  return density_from_json(j);
}

CampaignResult run_campaign(const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw OutOfRangeError("verify-law: trials must be >= 1");
  if (!(cfg.tolerance > 0.0))
    throw OutOfRangeError("verify-law: tolerance must be > 0");
  std::optional<KrausChannel> pinned;
  if (cfg.channel_spec) pinned = parse_channel_spec(*cfg.channel_spec);

  CampaignResult res;
  const bool grid_tail = (cfg.law == "factorization");
  const int total = cfg.trials + (grid_tail ? 101 : 0);
  res.reports.reserve(total);

  for (int i = 0; i < total; ++i) {
    SplitMix64 g = SplitMix64::stream(cfg.seed, static_cast<std::uint64_t>(i));
    const std::uint64_t s1 = g.next_u64();
    const std::uint64_t s2 = g.next_u64();
    const std::uint64_t s3 = g.next_u64();
    const double u = g.next_double();
    const int rank = 1 + i % 4;

    TrialReport r;
    r.trial_index = i;
    r.seed = s1;
    bool is_margin = false;

    auto channel1 = [&] {
      return pinned ? *pinned : random_channel(s1, rank);
    };

    if (cfg.law == "factorization") {
      PureState psi = random_pure(s2);
      if (i >= cfg.trials) {
        const double omega = static_cast<double>(i - cfg.trials) / 100.0;
        psi = pure_chi(omega);
        r.inputs.emplace_back("omega", omega);
      }
      r.inputs.emplace_back("kraus_rank", rank);
      r.metric = factorization_residual(channel1(), psi);
    } else if (cfg.law == "dual" || cfg.law == "eigen") {
      const double omega = 0.01 + 0.98 * u;
      r.inputs.emplace_back("omega", omega);
      r.inputs.emplace_back("kraus_rank", rank);
      const KrausChannel ch = channel1();
      r.metric = (cfg.law == "dual")
                     ? dual_check(ch, omega)
                     : eigen_proportionality(ch, omega).residual;
    } else if (cfg.law == "mixed-bound") {
      const int state_rank = 2 + i % 3;
      r.inputs.emplace_back("kraus_rank", rank);
      r.inputs.emplace_back("state_rank", state_rank);
      r.metric =
          mixed_bound_margin(channel1(), random_mixed(s3, state_rank)).margin;
      is_margin = true;
    } else if (cfg.law == "two-sided") {
      const int state_rank = 1 + i % 4;
      r.inputs.emplace_back("kraus_rank", rank);
      r.inputs.emplace_back("state_rank", state_rank);
      r.metric = two_sided_margin(channel1(),
                                  random_channel(s2, 1 + (i / 4) % 4),
                                  random_mixed(s3, state_rank))
                     .margin;
      is_margin = true;
    } else if (cfg.law == "concat") {
      r.inputs.emplace_back("kraus_rank", rank);
      r.metric =
          concat_margin(random_channel(s2, 1 + (i / 4) % 4), channel1()).margin;
      is_margin = true;
    } else {
      throw ParseError("unknown law: " + cfg.law);
    }

    r.passed = is_margin ? (r.metric >= -cfg.tolerance)
                         : (std::abs(r.metric) <= cfg.tolerance);
    res.max_abs_metric = std::max(res.max_abs_metric, std::abs(r.metric));
    res.all_passed = res.all_passed && r.passed;
    res.reports.push_back(std::move(r));
  }
  return res;
}

int cmd_concurrence(const std::string& state_spec, std::ostream& out) {
  const DensityMatrix rho = parse_state_spec(state_spec);
  out << fmt_fixed12(concurrence(rho)) << '\n';
  return 0;
}

int cmd_choi(const std::string& channel_spec, std::ostream& out) {
  const ChoiState cs = choi_state(parse_channel_spec(channel_spec));
  nlohmann::json j;
  j["prob"] = cs.prob;
  j["state"] = density_to_json(cs.state);
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_verify_law(const CampaignConfig& cfg, std::ostream& out) {
  const CampaignResult res = run_campaign(cfg);
  if (cfg.format == "json")
    render_reports_json(cfg, res, out);
  else
    render_reports_csv(cfg, res, out);
  return res.all_passed ? 0 : 1;
}

int cmd_sweep(const SweepConfig& cfg, std::ostream& out) {
  if (cfg.steps < 1) throw OutOfRangeError("sweep: steps must be >= 1");
  const DensityMatrix rho0 = parse_state_spec(cfg.initial);
  const double c0 = concurrence(rho0);
  const DensityMatrix probe = density_from_pure(bell_phi_plus());

  struct Row {
    double t, param, c_choi, c_predicted, c_direct;
  };
  std::vector<Row> rows;
  for (int k = 0; k <= cfg.steps; ++k) {
    const double t = cfg.t_max * static_cast<double>(k) / cfg.steps;
    const KrausChannel ch = family_at_time(cfg.family, cfg.gamma_rate, t);
    const double param = 1.0 - std::exp(-cfg.gamma_rate * t);
    const double c_choi = output_concurrence(ch, probe, Side::Right);
    const double c_direct = output_concurrence(ch, rho0, Side::Right);
    rows.push_back({t, cfg.family == "phase-flip" ? 0.5 * param : param,
                    c_choi, c_choi * c0, c_direct});
  }

  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"t", r.t},
                   {"param", r.param},
                   {"c_choi", r.c_choi},
                   {"c_predicted", r.c_predicted},
                   {"c_direct", r.c_direct}});
    }
    out << j.dump(2) << '\n';
  } else {
    out << "t,param,c_choi,c_predicted,c_direct\n";
    for (const auto& r : rows) {
      out << fmt_double(r.t) << ',' << fmt_double(r.param) << ','
          << fmt_double(r.c_choi) << ',' << fmt_double(r.c_predicted) << ','
          << fmt_double(r.c_direct) << '\n';
    }
  }
  return 0;
}

int cmd_threshold(const ThresholdConfig& cfg, std::ostream& out) {
  const SideConfig side = cfg.side == "two" ? SideConfig::TwoSided
                                            : SideConfig::OneSided;
  const double x =
      disentanglement_threshold(named_family(cfg.family), side, cfg.tolerance);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  out << buf << '\n';
  return 0;
}

int cmd_swap_demo(double omega, const std::string& channel_spec,
                  std::ostream& out) {
  const KrausChannel ch = parse_channel_spec(channel_spec);
  const MixedOutcome sw = entanglement_swap(omega, ch);
  const ApplicationResult direct =
      apply_one_sided(ch, density_from_pure(pure_chi(omega)), Side::Right);
  out << "prob " << fmt_double(sw.prob) << '\n'
      << "deviation " << fmt_double(max_abs_diff(sw.state.mat, direct.state.mat))
      << '\n'
      << "concurrence_swap " << fmt_fixed12(concurrence(sw.state)) << '\n'
      << "concurrence_direct " << fmt_fixed12(concurrence(direct.state))
      << '\n';
  return 0;
}

}  // namespace entfact::cli
