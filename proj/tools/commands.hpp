// Copyright 2026 The amekit Authors
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

// Command implementations for the amekit tool. Kept in a header so the test
// suite can drive them in-process through the same argument parser.

#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "amekit/amekit.hpp"

namespace amekit::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

using Json = io::Json;

namespace detail {

inline Parties parse_party_list(const std::string& text) {
  Parties out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) throw DomainError("empty entry in party list '" + text + "'");
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw DomainError("invalid party index '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty party list");
  return out;
}

inline PureState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open state file '" + path + "'");
  try {
    return io::read_state(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

inline void save(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

inline Json tolerances() {
  return Json{{"norm", kTolNorm}, {"entropy", kTolEnt}, {"eigenvalue_floor", kTolEig}};
}

inline Json amplitudes_json(const Vector& v) {
  Json out = Json::array();
  for (const Complex& a : v) out.push_back({a.real(), a.imag()});
  return out;
}

/// Secret or payload qudits from a choice: random | zero | uniform | basis:i,j,...
inline std::vector<PureState> single_qudits(const std::string& choice, std::size_t count, int d,
                                            Rng& rng) {
  std::vector<PureState> out;
  if (choice == "random") {
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_state(1, d, rng));
  } else if (choice == "zero") {
    out.assign(count, PureState::basis(d, {0}));
  } else if (choice == "uniform") {
    out.assign(count, qss::SecretState::uniform(d).as_state());
  } else if (choice.rfind("basis:", 0) == 0) {
    const Parties labels = parse_party_list(choice.substr(6));
    if (labels.size() != count) {
      throw DomainError("payload choice needs " + std::to_string(count) + " labels");
    }
    for (auto k : labels) {
      if (k >= static_cast<std::size_t>(d)) throw DomainError("payload label outside Z_d");
      out.push_back(PureState::basis(d, {static_cast<Dit>(k)}));
    }
  } else {
    throw DomainError("unknown payload choice '" + choice + "'");
  }
  return out;
}

}  // namespace detail

struct Options {
  std::string kind;
  std::size_t n = 0;
  int d = 2;
  int logical = 0;
  std::string generator;
  std::string out;
  std::string state;
  std::string scheme;
  std::string report;
  std::string cut;
  std::string direction = "b-to-a";
  std::string payload = "random";
  std::string secret = "random";
  std::string mode = "exhaustive";
  std::string action;
  std::size_t dealer = 0;
  std::size_t samples = 16;
  std::uint64_t seed = 0;
  bool all_cuts = false;
};

struct Outcome {
  int code;
  Json report;
};

inline Outcome construct(const Options& o) {
  PureState s = [&] {
    if (o.kind == "ghz") return build_ghz(o.n, o.d);
    if (o.kind == "epr") return build_epr(o.d);
    if (o.kind == "ame52") {
      if (o.logical != 0 && o.logical != 1) throw DomainError("--logical must be 0 or 1");
      auto pair = fixture_ame52();
      return o.logical == 0 ? pair.first : pair.second;
    }
    if (o.kind == "ame62") return fixture_ame62();
    if (o.kind == "mds") {
      if (o.generator.empty()) throw DomainError("--kind mds needs --generator FILE");
      std::ifstream in(o.generator);
      if (!in) throw DomainError("cannot open generator file '" + o.generator + "'");
      return ame_from_mds(io::read_code(in));
    }
    throw DomainError("unknown kind '" + o.kind + "'");
  }();
  detail::save(o.out, io::state_to_string(s));
  std::size_t nonzero = 0;
  for (const Complex& a : s.amplitudes()) nonzero += a != Complex(0.0);
  return {kPass, Json{{"kind", o.kind},
                      {"n", s.parties()},
                      {"d", s.local_dim()},
                      {"amplitudes", s.size()},
                      {"nonzero", nonzero},
                      {"norm", s.amplitudes().norm()},
                      {"out", o.out}}};
}

inline Outcome verify(const Options& o) {
  const PureState s = detail::load_state(o.state);
  const AmeReport r = certify_ame(s, {.include_smaller_cuts = o.all_cuts});
  Json cuts = Json::array();
  for (const auto& c : r.per_cut_entropies) {
    cuts.push_back({{"B", c.cut.b()},
                    {"A", c.cut.a()},
                    {"entropy_bits", c.entropy},
                    {"max_bits", c.entropy + c.deficit},
                    {"deficit_bits", c.deficit}});
  }
  return {r.is_ame ? kPass : kFail,
          Json{{"n", s.parties()},
               {"d", s.local_dim()},
               {"cuts", std::move(cuts)},
               {"worst_cut", io::to_json(r.worst_bipartition)},
               {"worst_deficit_bits", r.worst_entropy_deficit},
               {"is_ame", r.is_ame},
               {"criterion", "worst_deficit_bits <= tolerances.entropy"}}};
}

inline Outcome teleport_cmd(const Options& o) {
  const PureState s = detail::load_state(o.state);
  const Parties b = detail::parse_party_list(o.cut);
  if (b.size() * 2 > s.parties()) {
    throw DomainError("parallel teleportation requires m = |B| <= |A| = n - m; cut has |B| = " +
                      std::to_string(b.size()) + ", |A| = " +
                      std::to_string(s.parties() - std::min(b.size(), s.parties())));
  }
  const Bipartition cut(s.parties(), b);
  teleport::Direction dir;
  if (o.direction == "a-to-b" || o.direction == "A->B") {
    dir = teleport::Direction::JointToLocal;
  } else if (o.direction == "b-to-a" || o.direction == "B->A") {
    dir = teleport::Direction::LocalToJoint;
  } else {
    throw DomainError("--direction must be a-to-b or b-to-a");
  }
  if (o.mode != "exhaustive" && o.mode != "sampled") {
    throw DomainError("--mode must be exhaustive or sampled");
  }
  const int d = s.local_dim();
  const std::size_t m = cut.m();
  Rng rng(o.seed);
  const auto qudits = detail::single_qudits(o.payload, m, d, rng);
  PureState joint_payload = qudits.front();
  for (std::size_t i = 1; i < m; ++i) joint_payload = tensor(joint_payload, qudits[i]);
  if (dir == teleport::Direction::JointToLocal && o.payload == "random") {
    // An entangled m-qudit payload exercises the joint sender fully.
    joint_payload = random_state(m, d, rng);
  }

  const auto u = teleport::build_reduction_unitary(s, cut);
  std::vector<std::optional<std::vector<BellOutcome>>> runs;
  if (o.mode == "exhaustive") {
    for (auto& seq : teleport::all_outcome_sequences(m, d)) runs.emplace_back(std::move(seq));
  } else {
    runs.assign(o.samples, std::nullopt);
  }
  Json records = Json::array();
  double min_f = 1.0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::uint64_t run_seed = rng.next();
    const auto t = dir == teleport::Direction::JointToLocal
                       ? teleport::teleport_joint_to_local(s, u, joint_payload, runs[i], run_seed)
                       : teleport::teleport_local_to_joint(s, u, qudits, runs[i], run_seed);
    min_f = std::min(min_f, t.final_fidelity);
    records.push_back(io::to_json(t));
  }
  const bool pass = min_f >= 1.0 - kTolEnt;
  return {pass ? kPass : kFail,
          Json{{"direction", teleport::to_string(dir)},
               {"cut", io::to_json(cut)},
               {"mode", o.mode},
               {"payload", o.payload},
               {"payload_amplitudes", detail::amplitudes_json(joint_payload.amplitudes())},
               {"runs", std::move(records)},
               {"min_fidelity", min_f},
               {"criterion", "min_fidelity >= 1 - tolerances.entropy"},
               {"pass", pass}}};
}

inline Outcome qss_cmd(const Options& o) {
  const qss::QssScheme scheme = [&] {
    if (!o.scheme.empty()) {
      std::ifstream in(o.scheme);
      if (!in) throw DomainError("cannot open scheme file '" + o.scheme + "'");
      return io::read_scheme(in);
    }
    if (o.state.empty()) throw DomainError("qss needs --state or --scheme");
    return qss::qss_from_ame(detail::load_state(o.state), o.dealer);
  }();
  Rng rng(o.seed);
  const qss::SecretState secret(detail::single_qudits(o.secret, 1, scheme.d, rng).front());
  Json base{{"action", o.action}, {"m", scheme.m}, {"d", scheme.d}, {"players", scheme.players}};
  if (scheme.dealer_origin) base["dealer"] = scheme.dealer_origin->dealer;

  if (o.action == "derive") {
    if (o.out.empty()) throw DomainError("derive needs --out FILE");
    std::ostringstream os;
    io::write_scheme(os, scheme);
    detail::save(o.out, os.str());
    const auto c = qss::check_scheme(scheme);
    base["orthonormality_deviation"] = c.orthonormality_deviation;
    base["recovery_deviation"] = c.recovery_deviation;
    base["security_deviation"] = c.security_deviation;
    base["pass"] = c.valid();
    base["criterion"] = "all deviations <= tolerances.norm";
    base["out"] = o.out;
    return {c.valid() ? kPass : kFail, base};
  }
  if (o.action == "encode") {
    const PureState shares = qss::encode_secret(scheme, secret);
    if (!o.out.empty()) detail::save(o.out, io::state_to_string(shares));
    base["secret"] = detail::amplitudes_json(secret.amplitudes());
    base["norm"] = shares.amplitudes().norm();
    base["pass"] = true;
    return {kPass, base};
  }
  if (o.action == "recover") {
    const PureState shares = qss::encode_secret(scheme, secret);
    Json subsets = Json::array();
    double min_f = 1.0;
    for (const auto& a : subsets_of_size(scheme.shares(), scheme.m)) {
      const double f =
          fidelity(secret.as_state(), qss::recover_secret(qss::build_recovery_unitary(scheme, a), shares));
      min_f = std::min(min_f, f);
      subsets.push_back({{"authorized", a}, {"fidelity", f}, {"pass", f >= 1.0 - kTolEnt}});
    }
    const bool pass = min_f >= 1.0 - kTolEnt;
    base["secret"] = detail::amplitudes_json(secret.amplitudes());
    base["subsets"] = std::move(subsets);
    base["min_fidelity"] = min_f;
    base["criterion"] = "min_fidelity >= 1 - tolerances.entropy";
    base["pass"] = pass;
    return {pass ? kPass : kFail, base};
  }
  if (o.action == "security") {
    const auto probes = qss::default_probes(scheme.d, o.seed);
    Json subsets = Json::array();
    bool pass = true;
    double worst = 0.0;
    for (const auto& u : subsets_of_size(scheme.shares(), scheme.m - 1)) {
      const auto r = qss::security_check(scheme, u, probes);
      pass = pass && r.passed();
      worst = std::max(worst, r.max_trace_distance);
      Json entry{{"unauthorized", u}, {"max_trace_distance", r.max_trace_distance}};
      if (r.max_mixedness_deviation) entry["max_mixedness_deviation"] = *r.max_mixedness_deviation;
      entry["pass"] = r.passed();
      subsets.push_back(std::move(entry));
    }
    base["probes"] = probes.size();
    base["subsets"] = std::move(subsets);
    base["max_trace_distance"] = worst;
    base["criterion"] = "every distance and mixedness deviation <= tolerances.entropy";
    base["pass"] = pass;
    return {pass ? kPass : kFail, base};
  }
  if (o.action == "measure-share") {
    if (!scheme.dealer_origin) throw DomainError("measure-share needs the AME state (--state or a scheme with a dealer)");
    const PureState& ame = scheme.dealer_origin->ame;
    const std::size_t dealer = scheme.dealer_origin->dealer;
    std::vector<qss::RecoveryUnitary> recoveries;
    for (const auto& a : subsets_of_size(scheme.shares(), scheme.m)) {
      recoveries.push_back(qss::build_recovery_unitary(scheme, a));
    }
    Json outcomes = Json::array();
    double min_f = 1.0;
    for (int a = 0; a < scheme.d; ++a) {
      for (int b = 0; b < scheme.d; ++b) {
        const auto share = qss::share_via_dealer_measurement(ame, dealer, secret, BellOutcome{a, b});
        Json fids = Json::array();
        for (const auto& r : recoveries) {
          const double f = fidelity(secret.as_state(), qss::recover_secret(r, share.residual, share.correction));
          min_f = std::min(min_f, f);
          fids.push_back({{"authorized", r.authorized}, {"fidelity", f}});
        }
        outcomes.push_back({{"outcome", {a, b}},
                            {"probability", share.probability},
                            {"correction", {share.correction.shift(), share.correction.phase()}},
                            {"recoveries", std::move(fids)}});
      }
    }
    const bool pass = min_f >= 1.0 - kTolEnt;
    base["secret"] = detail::amplitudes_json(secret.amplitudes());
    base["outcomes"] = std::move(outcomes);
    base["min_fidelity"] = min_f;
    base["criterion"] = "min_fidelity >= 1 - tolerances.entropy";
    base["pass"] = pass;
    return {pass ? kPass : kFail, base};
  }
  throw DomainError("unknown --action '" + o.action + "'");
}

/// Parses `args` (args[0] is the program name), runs the command and writes
/// the JSON report to --report or `out`. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"amekit: absolutely maximally entangled states, parallel teleportation and "
               "threshold quantum secret sharing"};
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "Write a state file");
  construct_cmd->add_option("--kind", o.kind, "ghz | epr | ame52 | ame62 | mds")
      ->required()
      ->check(CLI::IsMember({"ghz", "epr", "ame52", "ame62", "mds"}));
  construct_cmd->add_option("--n", o.n, "Party count (ghz)");
  construct_cmd->add_option("--d", o.d, "Local dimension (ghz, epr)");
  construct_cmd->add_option("--logical", o.logical, "Which five-qubit logical state (ame52)");
  construct_cmd->add_option("--generator", o.generator, "Generator file (mds)");
  construct_cmd->add_option("--out", o.out, "Output state file")->required();
  construct_cmd->add_option("--report", o.report, "Report file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Certify the AME property");
  verify_cmd->add_option("--state", o.state, "State file")->required();
  verify_cmd->add_option("--report", o.report, "Report file (default: stdout)");
  verify_cmd->add_flag("--all-cuts", o.all_cuts, "Also list cuts smaller than floor(n/2)");

  auto* teleport_cmd_app = app.add_subcommand("teleport", "Simulate parallel teleportation");
  teleport_cmd_app->add_option("--state", o.state, "State file")->required();
  teleport_cmd_app->add_option("--cut", o.cut, "Comma-separated parties of B")->required();
  teleport_cmd_app->add_option("--direction", o.direction, "a-to-b | b-to-a");
  teleport_cmd_app->add_option("--payload", o.payload, "random | zero | uniform | basis:k1,...");
  teleport_cmd_app->add_option("--mode", o.mode, "exhaustive | sampled");
  teleport_cmd_app->add_option("--samples", o.samples, "Runs in sampled mode");
  teleport_cmd_app->add_option("--seed", o.seed, "RNG seed");
  teleport_cmd_app->add_option("--report", o.report, "Report file (default: stdout)");

  auto* qss_app = app.add_subcommand("qss", "Threshold secret sharing from an AME state");
  qss_app->add_option("--state", o.state, "AME state file");
  qss_app->add_option("--scheme", o.scheme, "Scheme file (instead of --state)");
  qss_app->add_option("--dealer", o.dealer, "Dealer party");
  qss_app->add_option("--action", o.action, "derive | encode | recover | security | measure-share")
      ->required()
      ->check(CLI::IsMember({"derive", "encode", "recover", "security", "measure-share"}));
  qss_app->add_option("--secret", o.secret, "random | zero | uniform | basis:i");
  qss_app->add_option("--seed", o.seed, "RNG seed");
  qss_app->add_option("--out", o.out, "Output file (derive, encode)");
  qss_app->add_option("--report", o.report, "Report file (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  std::string echo;
  for (std::size_t i = 1; i < args.size(); ++i) echo += (i > 1 ? " " : "") + args[i];

  Outcome result{kUsage, {}};
  try {
    if (*construct_cmd) result = construct(o);
    if (*verify_cmd) result = verify(o);
    if (*teleport_cmd_app) result = teleport_cmd(o);
    if (*qss_app) result = qss_cmd(o);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Json report{{"command", echo}, {"seed", o.seed}, {"tolerances", detail::tolerances()}};
  for (auto& [k, v] : result.report.items()) report[k] = v;
  report["exit_code"] = result.code;
  const std::string text = report.dump(2) + "\n";
  if (o.report.empty()) {
    out << text;
  } else {
    try {
      detail::save(o.report, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }
  return result.code;
}

}  // namespace amekit::cli
