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

#include <numbers>

#include "pulsegate/attacks/attacks.hpp"
#include "pulsegate/core/hash.hpp"
#include "pulsegate/demo/demo.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/sim/matrices.hpp"
#include "pulsegate/sim/simulator.hpp"

namespace pulsegate::demo {

namespace {

constexpr double kPi = std::numbers::pi;

void cz(std::vector<GateOp>& ops) {
  ops.push_back(make_op(GateKind::H, {1}));
  ops.push_back(make_op(GateKind::CX, {0, 1}));
  ops.push_back(make_op(GateKind::H, {1}));
}

std::map<std::string, double> exact(const Schedule& s, const CalibrationSnapshot& calib) {
  sim::SimOptions o;
  o.shots = 0;
  return sim::simulate_shots(s, calib, o).probabilities;
}

std::map<std::string, std::int64_t> sampled(const Schedule& s, const CalibrationSnapshot& calib,
                                            std::int64_t shots, std::uint64_t seed) {
  sim::SimOptions o;
  o.shots = shots;
  o.seed = seed;
  return sim::simulate_shots(s, calib, o).counts;
}

}  // namespace

CalibrationSnapshot grover_device(std::uint64_t seed) {
  return synthesize_snapshot(2, {{0, 1}, {1, 0}}, seed);
}

int parse_basis_state(std::string_view s) {
  if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1')) {
    throw InvalidArgument("basis state must be one of 00, 01, 10, 11");
  }
  return (s[0] - '0') * 2 + (s[1] - '0');
}

std::string basis_state(int index) {
  return std::string{static_cast<char>('0' + ((index >> 1) & 1)),
                     static_cast<char>('0' + (index & 1))};
}

std::vector<GateOp> grover_ops(std::string_view marked) {
  const int m = parse_basis_state(marked);
  // The oracle's X flips on unmarked bits fold into the neighbouring H's
  // as an extra RZ(pi): H.X = Z.H and X.H = H.Z.
  double angle[2];
  for (int q = 0; q < 2; ++q) angle[q] = kPi / 2 + kPi * (1 - ((m >> q) & 1));

  std::vector<GateOp> ops;
  for (int q = 0; q < 2; ++q) {
    ops.push_back(make_op(GateKind::RZ, {q}, {angle[q]}));
    ops.push_back(make_op(GateKind::SX, {q}));
    ops.push_back(make_op(GateKind::RZ, {q}, {kPi / 2}));
  }
  cz(ops);
  for (int q = 0; q < 2; ++q) {
    ops.push_back(make_op(GateKind::RZ, {q}, {kPi / 2}));
    ops.push_back(make_op(GateKind::SX, {q}));
    ops.push_back(make_op(GateKind::RZ, {q}, {angle[q]}));
  }
  for (int q = 0; q < 2; ++q) ops.push_back(make_op(GateKind::X, {q}));
  cz(ops);
  for (int q = 0; q < 2; ++q) ops.push_back(make_op(GateKind::X, {q}));
  for (int q = 0; q < 2; ++q) ops.push_back(make_op(GateKind::H, {q}));
  return ops;
}

GateCircuit grover_circuit(std::string_view marked, const CalibrationSnapshot& calib) {
  const auto ops = grover_ops(marked);
  GateCircuit c{2, 2, {}};
  c.add(make_custom_op(lower::make_custom_gate("grover", {0, 1}, ops, calib,
                                               sim::circuit_unitary(ops, {0, 1}))));
  c.add(make_measure(0, 0));
  c.add(make_measure(1, 1));
  return c;
}

GroverResult run_grover(std::string_view marked, std::string_view attacked,
                        const CalibrationSnapshot& calib, std::int64_t shots, std::uint64_t seed) {
  GroverResult r;
  r.marked = std::string(marked);
  r.attacked = std::string(attacked);
  r.calibration_hash = content_hash(calib);

  const GateCircuit base = grover_circuit(marked, calib);
  const GateCircuit goal = grover_circuit(attacked, calib);
  const Schedule& sb = base.ops[0].custom->schedule;
  const Schedule& sg = goal.ops[0].custom->schedule;
  if (sb.size() != sg.size()) throw Error("grover schedules differ in structure");
  r.total_instructions = static_cast<int>(sb.size());

  const auto ob = grover_ops(marked);
  const auto og = grover_ops(attacked);
  for (std::size_t i = 0; i < ob.size(); ++i) {
    if (ob[i].params != og[i].params) ++r.edited_gates;
  }

  GateCircuit c = base;
  for (std::size_t k = 0; k < sb.size(); ++k) {
    if (sb[k] == sg[k]) continue;
    const auto* p = std::get_if<ShiftPhase>(&sg[k].instruction);
    if (!p || sb[k].start_time != sg[k].start_time || sb[k].channel() != sg[k].channel()) {
      throw Error("grover schedules differ beyond frame changes");
    }
    auto t = attack::phase_mismatch(c, 0, k, p->delta);
    c = std::move(t.artifact);
    r.records.push_back(std::move(t.record));
    ++r.edited_instructions;
  }
  r.tampered_circuit = c;

  const Schedule lb = lower::lower_circuit(base, calib, lower::LoweringMode::permissive);
  const Schedule lt = lower::lower_circuit(c, calib, lower::LoweringMode::permissive);
  r.baseline = exact(lb, calib);
  r.tampered = exact(lt, calib);
  if (shots > 0) {
    r.baseline_counts = sampled(lb, calib, shots, seed);
    r.tampered_counts = sampled(lt, calib, shots, seed);
  }
  return r;
}

void write_csv(std::ostream& os, const GroverResult& r) {
  os << "# pulsegate " << version() << "\n";
  os << "# calibration " << r.calibration_hash << "\n";
  os << "# marked " << r.marked << " attacked " << r.attacked << " edited_gates " << r.edited_gates
     << " edited_instructions " << r.edited_instructions << " of " << r.total_instructions << "\n";
  os << "state,p_baseline,p_tampered,count_baseline,count_tampered\n";
  os.precision(10);
  for (int i = 0; i < 4; ++i) {
    const std::string s = basis_state(i);
    auto get = [&](const auto& m) {
      auto it = m.find(s);
      return it == m.end() ? decltype(it->second){} : it->second;
    };
    os << s << ',' << get(r.baseline) << ',' << get(r.tampered) << ',' << get(r.baseline_counts)
       << ',' << get(r.tampered_counts) << "\n";
  }
}

json to_json(const GroverResult& r) {
  json recs = json::array();
  for (const auto& x : r.records) recs.push_back(attack::to_json(x));
  const double frac =
      r.total_instructions ? static_cast<double>(r.edited_instructions) / r.total_instructions : 0.0;
  return {{"marked", r.marked},
          {"attacked", r.attacked},
          {"calibration_hash", r.calibration_hash},
          {"version", version()},
          {"baseline", r.baseline},
          {"tampered", r.tampered},
          {"baseline_counts", r.baseline_counts},
          {"tampered_counts", r.tampered_counts},
          {"edited_gates", r.edited_gates},
          {"edited_instructions", r.edited_instructions},
          {"total_instructions", r.total_instructions},
          {"edited_fraction", frac},
          {"records", recs}};
}

}  // namespace pulsegate::demo
