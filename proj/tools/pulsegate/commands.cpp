// Copyright 2026 The pulsegate Authors
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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "io.hpp"
#include "pulsegate/attacks/attacks.hpp"
#include "pulsegate/core/hash.hpp"
#include "pulsegate/core/random.hpp"
#include "pulsegate/demo/demo.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/sim/simulator.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pulsegate::cli {
namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

GateCircuit load_circuit(const std::string& p) {
  auto c = load<GateCircuit>(p);
  validate(c);
  return c;
}

lower::LoweringMode parse_mode(const std::string& s) {
  if (s == "strict") return lower::LoweringMode::strict;
  if (s == "permissive") return lower::LoweringMode::permissive;
  throw UsageError("--mode must be strict or permissive, got '" + s + "'");
}

json provenance(const CalibrationSnapshot& calib) {
  return {{"version", demo::version()}, {"calibration_hash", content_hash(calib)}};
}

void print_report(std::ostream& os, const verify::PipelineResult& r) {
  for (const auto& rep : r.reports) {
    os << to_string(rep.stage) << ": "
       << (rep.skipped ? "skipped" : rep.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& f : rep.findings) {
      os << "  [" << to_string(f.severity) << "] " << f.kind;
      if (!f.location.empty()) os << " at " << f.location;
      os << ": " << f.explanation << "\n";
    }
  }
  const auto failed = r.failed_stage();
  os << (failed ? "verdict: FAIL (" + std::string(to_string(*failed)) + " stage)" : "verdict: pass")
     << "\n";
}

}  // namespace

int cmd_calibrate(const GlobalArgs& g, const CalibrateArgs& a) {
  const std::uint64_t seed = g.seed.value_or(0);
  CalibrationSnapshot c = g.calib ? load_calibration(g.calib)
                                  : synthesize_snapshot(a.qubits, parse_coupling(a.coupling), seed);
  if (a.drift_hours) c = drift_snapshot(c, *a.drift_hours, seed);
  write_text(a.out, canonical_dump(to_json(c)) + "\n");
  if (!a.out.empty() && !g.json) std::cerr << "calibration " << content_hash(c) << "\n";
  return kOk;
}

int cmd_lower(const GlobalArgs& g, const LowerArgs& a) {
  const auto calib = load_calibration(g.calib);
  const auto c = load_circuit(a.circuit);
  try {
    const Schedule s = lower::lower_circuit(c, calib, parse_mode(a.mode));
    write_text(a.out, dump(to_json(s)));
    return kOk;
  } catch (const lower::BindingMismatchError& e) {
    std::cerr << "binding-mismatch: " << e.what() << "\n";
  } catch (const lower::OverlapError& e) {
    std::cerr << "overlap: " << e.what() << "\n";
  } catch (const lower::TimingError& e) {
    std::cerr << "timing: " << e.what() << "\n";
  }
  return kFail;
}

int cmd_simulate(const GlobalArgs& g, const SimulateArgs& a) {
  const auto calib = load_calibration(g.calib);
  if (a.circuit.empty() == a.schedule.empty())
    throw UsageError("give exactly one of --circuit or --schedule");
  if (a.shots < 1) throw UsageError("--shots must be positive");

  sim::SimOptions opt;
  opt.noise = a.noise;
  opt.shots = a.shots;
  opt.seed = g.seed.value_or(0);
  Schedule s;
  if (!a.circuit.empty()) {
    const auto c = load_circuit(a.circuit);
    s = lower::lower_circuit(c, calib, parse_mode(a.mode));
    opt.num_clbits = c.num_clbits;
  } else {
    s = load<Schedule>(a.schedule);
  }

  if (a.sweep_entry) {
    if (a.sweep_min > a.sweep_max) throw UsageError("empty sweep range");
    std::ostringstream os;
    os << "# pulsegate " << demo::version() << "\n";
    os << "# calibration " << content_hash(calib) << "\n";
    os << "# timing offset sweep of entry " << *a.sweep_entry << ", clbit " << a.bit << "\n";
    os << "offset,probability,exact,shots,stderr\n";
    os.precision(10);
    std::uint64_t point = 0;
    for (std::int64_t off = a.sweep_min; off <= a.sweep_max; ++off, ++point) {
      const Schedule shifted =
          off == 0 ? s : attack::timing_mismatch(s, *a.sweep_entry, off).artifact;
      sim::SimOptions o = opt;
      o.seed = derive_seed(opt.seed, point);
      const auto r = sim::simulate_shots(shifted, calib, o);
      const double p = sim::marginal_one(r.counts, a.bit);
      const double exact = sim::marginal_one(r.probabilities, a.bit);
      os << off << ',' << p << ',' << exact << ',' << a.shots << ','
         << std::sqrt(p * (1.0 - p) / static_cast<double>(a.shots)) << "\n";
    }
    write_text(a.out, os.str());
    return kOk;
  }

  const auto r = sim::simulate_shots(s, calib, opt);
  json out = provenance(calib);
  out["seed"] = opt.seed;
  out["shots"] = opt.shots;
  out["noise"] = opt.noise;
  out["num_clbits"] = r.num_clbits;
  out["counts"] = r.counts;
  out["probabilities"] = r.probabilities;
  json marg = json::array();
  for (int b = 0; b < r.num_clbits; ++b) marg.push_back(sim::marginal_one(r.probabilities, b));
  out["p_one"] = marg;
  write_text(a.out, dump(out));
  return kOk;
}

int cmd_attack(const GlobalArgs& g, const AttackArgs& a) {
  if (a.circuit.empty() == a.schedule.empty())
    throw UsageError("give exactly one of --circuit or --schedule");
  const json spec = read_json(a.attack);
  json artifact;
  attack::TamperRecord record;
  if (!a.circuit.empty()) {
    const auto calib = load_calibration(g.calib);
    auto t = attack::apply_attack(load_circuit(a.circuit), spec, calib);
    artifact = to_json(t.artifact);
    record = std::move(t.record);
  } else {
    auto t = attack::apply_attack(load<Schedule>(a.schedule), spec);
    artifact = to_json(t.artifact);
    record = std::move(t.record);
  }
  write_text(a.out, dump(artifact));
  if (!a.record_out.empty()) write_text(a.record_out, dump(attack::to_json(record)));
  if (!g.json) {
    std::cerr << "applied " << to_string(record.kind);
    for (const auto& f : record.flags) std::cerr << " [" << f << "]";
    std::cerr << "\n";
  }
  return kOk;
}

int cmd_publish(const GlobalArgs& g, const PublishArgs& a) {
  const auto calib = load_calibration(g.calib);
  const auto c = load_circuit(a.circuit);
  verify::TrustedStore store(a.store);
  try {
    const Schedule s = a.schedule.empty()
                           ? lower::lower_circuit(c, calib, lower::LoweringMode::strict)
                           : load<Schedule>(a.schedule);
    const auto rec = store.publish(c, s, calib);
    if (g.json) {
      std::cout << dump({{"circuit_hash", rec.circuit_hash},
                         {"schedule_hash", rec.schedule_hash},
                         {"calibration_hash", rec.calibration_hash}});
    } else {
      std::cout << rec.circuit_hash << "\n";
    }
    return kOk;
  } catch (const verify::PublishRejected& e) {
    std::cerr << "publish rejected: " << e.what() << "\n";
  } catch (const lower::LoweringError& e) {
    std::cerr << "publish rejected: " << e.what() << "\n";
  }
  return kFail;
}

int cmd_verify(const GlobalArgs& g, const VerifyArgs& a) {
  const auto calib = load_calibration(g.calib);
  const auto c = load_circuit(a.circuit);
  verify::Tolerances tol;
  if (!a.tolerances.empty()) tol = verify::tolerances_from_json(read_json(a.tolerances));
  tol.validate();

  verify::TrustedStore store(a.store);
  const std::string key = gate_level_hash(c);
  verify::TrustedRecord trusted;
  try {
    trusted = store.fetch(key);
  } catch (const verify::StoreError& e) {
    std::cerr << "no usable trusted record: " << e.what() << "\n";
    return kFail;
  }

  const auto result = verify::verify_pipeline(c, trusted, calib, tol);
  json out = to_json(result);
  out["circuit_hash"] = key;
  out["provenance"] = provenance(calib);
  if (g.json || !a.out.empty()) write_text(a.out, dump(out));
  if (!g.json) print_report(a.out.empty() ? std::cout : std::cerr, result);
  return result.passed() ? kOk : kFail;
}

int cmd_demo_teleport(const GlobalArgs& g, const TeleportArgs& a) {
  const auto variant = demo::parse_teleport_variant(a.variant);
  if (a.theta_grid < 2) throw UsageError("--theta-grid needs at least 2 points");
  if (a.shots < 1) throw UsageError("--shots must be positive");
  const auto calib = g.calib ? load_calibration(g.calib) : demo::teleport_device();
  demo::TeleportOptions opt;
  opt.thetas = demo::theta_grid(a.theta_grid);
  opt.shots = a.shots;
  opt.seed = g.seed.value_or(0);
  opt.noise = a.noise;
  const auto r = demo::run_teleport(variant, calib, opt);
  if (g.json) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"theta", row.theta},
                      {"p1_bob", row.p1_bob},
                      {"p1_eve", row.p1_eve},
                      {"purity_bob", row.purity_bob},
                      {"stderr", row.stderr_bob},
                      {"theory", row.theory}});
    }
    json out = provenance(calib);
    out["variant"] = to_string(variant);
    out["shots"] = opt.shots;
    out["seed"] = opt.seed;
    out["rows"] = rows;
    write_text(a.out, dump(out));
  } else {
    std::ostringstream os;
    demo::write_csv(os, r);
    write_text(a.out, os.str());
  }
  return kOk;
}

int cmd_demo_grover(const GlobalArgs& g, const GroverArgs& a) {
  if (a.shots < 1) throw UsageError("--shots must be positive");
  const auto calib = g.calib ? load_calibration(g.calib) : demo::grover_device();
  const auto r = demo::run_grover(a.marked, a.attacked, calib, a.shots, g.seed.value_or(0));
  if (g.json) {
    write_text(a.out, dump(demo::to_json(r)));
  } else {
    std::ostringstream os;
    demo::write_csv(os, r);
    write_text(a.out, os.str());
  }
  return kOk;
}

int cmd_demo_flip(const GlobalArgs& g, const FlipArgs& a) {
  const auto m = demo::run_flip_matrix(g.seed.value_or(7));
  write_text(a.out, dump(demo::to_json(m)));
  if (!g.json && !a.out.empty()) {
    std::printf("%-10s %12s %12s %10s %10s\n", "gadget", "P1 disarmed", "P1 armed", "clean",
                "caught by");
    for (const auto& row : m.rows) {
      std::printf("%-10s %12.6f %12.6f %10s %10s\n", std::string(to_string(row.kind)).c_str(),
                  row.p1_disarmed, row.p1_armed, row.disarmed_passes ? "pass" : "FAIL",
                  row.detected_by ? std::string(to_string(*row.detected_by)).c_str() : "-");
    }
  }
  return kOk;
}

}  // namespace pulsegate::cli
