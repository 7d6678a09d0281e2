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

#include "pulsegate/attacks/gadgets.hpp"
#include "pulsegate/core/hash.hpp"
#include "pulsegate/demo/demo.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/sim/simulator.hpp"
#include "pulsegate/verify/verify.hpp"

#ifndef PULSEGATE_VERSION
#define PULSEGATE_VERSION "0.0.0"
#endif

namespace pulsegate::demo {

namespace {

double p1(const attack::FlipGadget& g) {
  sim::SimOptions o;
  o.shots = 0;
  o.noise = g.kind == attack::AttackKind::block;
  const Schedule s = lower::lower_circuit(g.circuit, g.calib, lower::LoweringMode::permissive);
  return sim::marginal_one(sim::simulate_shots(s, g.calib, o).probabilities, 0);
}

}  // namespace

std::string version() { return PULSEGATE_VERSION; }

FlipMatrix run_flip_matrix(std::uint64_t seed) {
  FlipMatrix m;
  for (auto kind : attack::kAllAttackKinds) {
    const auto clean = attack::build_flip_gadget(kind, false, seed);
    const auto armed = attack::build_flip_gadget(kind, true, seed);
    m.calibration_hash = content_hash(clean.calib);
    const auto trusted = verify::make_record(
        clean.circuit, lower::lower_circuit(clean.circuit, clean.calib, lower::LoweringMode::strict),
        clean.calib);
    FlipRow row;
    row.kind = kind;
    row.p1_disarmed = p1(clean);
    row.p1_armed = p1(armed);
    row.disarmed_passes = verify::verify_pipeline(clean.circuit, trusted, clean.calib).passed();
    row.detected_by = verify::verify_pipeline(armed.circuit, trusted, armed.calib).failed_stage();
    m.rows.push_back(row);
  }
  return m;
}

json to_json(const FlipMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.rows) {
    rows.push_back({{"gadget", attack::to_string(r.kind)},
                    {"p1_disarmed", r.p1_disarmed},
                    {"p1_armed", r.p1_armed},
                    {"disarmed_verify", r.disarmed_passes ? "pass" : "fail"},
                    {"detected_by", r.detected_by ? json(verify::to_string(*r.detected_by))
                                                  : json(nullptr)}});
  }
  return {{"version", version()}, {"calibration_hash", m.calibration_hash}, {"gadgets", rows}};
}

}  // namespace pulsegate::demo
