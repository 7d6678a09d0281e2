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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pulsegate/attacks/tamper.hpp"
#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/circuit.hpp"
#include "pulsegate/verify/report.hpp"

namespace pulsegate::demo {

std::string version();

// ---- Teleportation ------------------------------------------------------
// Four-qubit chain with both coupling directions. Alice holds q2, Bob q3
// and Eve q1; q0 idles. Corrections are deferred (a CZ instead of
// feed-forward), and the Alice/Bob entangling CX is a custom gate.
enum class TeleportVariant { benchmark, coupling_eve, decoupling, del_h };

std::string_view to_string(TeleportVariant v);
TeleportVariant parse_teleport_variant(std::string_view s);

CalibrationSnapshot teleport_device(std::uint64_t seed = 11);

struct TeleportCircuit {
  GateCircuit circuit;  // clbits: c0 = Alice, c1 = Eve, c2 = Bob
  std::size_t couple_op = 2;
  std::vector<attack::TamperRecord> records;
};

TeleportCircuit teleport_circuit(double theta, TeleportVariant v,
                                 const CalibrationSnapshot& calib, bool measure = true);

std::vector<double> theta_grid(int points = 11);

struct TeleportOptions {
  std::vector<double> thetas = theta_grid();
  std::int64_t shots = 4096;
  std::uint64_t seed = 0;
  bool noise = false;
};

struct TeleportRow {
  double theta = 0.0;
  double p1_bob = 0.0;
  double p1_eve = 0.0;
  double purity_bob = 0.0;
  double stderr_bob = 0.0;
  double theory = 0.0;  // sin^2(theta/2)
};

struct TeleportResult {
  TeleportVariant variant = TeleportVariant::benchmark;
  std::string calibration_hash;
  TeleportOptions options;
  std::vector<TeleportRow> rows;
};

TeleportResult run_teleport(TeleportVariant v, const CalibrationSnapshot& calib,
                            const TeleportOptions& options);
void write_csv(std::ostream& os, const TeleportResult& r);

// ---- Grover -------------------------------------------------------------
// Two qubits, one iteration, the whole operator (state preparation, oracle
// and diffuser) as a single custom gate. The marked state only enters
// through four RZ angles.
CalibrationSnapshot grover_device(std::uint64_t seed = 5);

// "00".."11", clbit 0 rightmost. Throws InvalidArgument otherwise.
int parse_basis_state(std::string_view s);
std::string basis_state(int index);

std::vector<GateOp> grover_ops(std::string_view marked);
GateCircuit grover_circuit(std::string_view marked, const CalibrationSnapshot& calib);

struct GroverResult {
  std::string marked;
  std::string attacked;
  std::string calibration_hash;
  std::map<std::string, double> baseline;  // exact probabilities
  std::map<std::string, double> tampered;
  std::map<std::string, std::int64_t> baseline_counts;
  std::map<std::string, std::int64_t> tampered_counts;
  int edited_gates = 0;         // gate-level RZ parameters that differ
  int edited_instructions = 0;  // frame changes rewritten
  int total_instructions = 0;   // in the custom gate schedule
  GateCircuit tampered_circuit;
  std::vector<attack::TamperRecord> records;
};

GroverResult run_grover(std::string_view marked, std::string_view attacked,
                        const CalibrationSnapshot& calib, std::int64_t shots = 4096,
                        std::uint64_t seed = 0);
void write_csv(std::ostream& os, const GroverResult& r);
json to_json(const GroverResult& r);

// ---- Flip gadgets -------------------------------------------------------
struct FlipRow {
  attack::AttackKind kind = attack::AttackKind::plunder;
  double p1_disarmed = 0.0;
  double p1_armed = 0.0;
  bool disarmed_passes = false;
  std::optional<verify::Stage> detected_by;
};

struct FlipMatrix {
  std::string calibration_hash;
  std::vector<FlipRow> rows;
};

FlipMatrix run_flip_matrix(std::uint64_t seed = 7);
json to_json(const FlipMatrix& m);

}  // namespace pulsegate::demo
