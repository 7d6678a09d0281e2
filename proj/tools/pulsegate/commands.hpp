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
#include <optional>
#include <string>

namespace pulsegate::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFail = 2 };

struct GlobalArgs {
  std::optional<std::string> calib;
  std::optional<std::uint64_t> seed;
  bool json = false;
};

struct CalibrateArgs {
  int qubits = 1;
  std::string coupling;
  std::string out;
  std::optional<double> drift_hours;
};

struct LowerArgs {
  std::string circuit;
  std::string mode = "strict";
  std::string out;
};

struct SimulateArgs {
  std::string circuit;
  std::string schedule;
  std::string mode = "permissive";
  std::int64_t shots = 1024;
  bool noise = false;
  std::optional<std::size_t> sweep_entry;  // --sweep-offset ENTRY
  std::int64_t sweep_min = 0;
  std::int64_t sweep_max = 15;
  int bit = 0;
  std::string out;
};

struct AttackArgs {
  std::string circuit;
  std::string schedule;
  std::string attack;
  std::string out;
  std::string record_out;
};

struct PublishArgs {
  std::string circuit;
  std::string schedule;
  std::string store;
};

struct VerifyArgs {
  std::string circuit;
  std::string store;
  std::string tolerances;
  std::string out;
};

struct TeleportArgs {
  std::string variant = "benchmark";
  int theta_grid = 11;
  std::int64_t shots = 4096;
  bool noise = false;
  std::string out;
};

struct GroverArgs {
  std::string marked = "11";
  std::string attacked = "11";
  std::int64_t shots = 4096;
  std::string out;
};

struct FlipArgs {
  std::string out;
};

int cmd_calibrate(const GlobalArgs& g, const CalibrateArgs& a);
int cmd_lower(const GlobalArgs& g, const LowerArgs& a);
int cmd_simulate(const GlobalArgs& g, const SimulateArgs& a);
int cmd_attack(const GlobalArgs& g, const AttackArgs& a);
int cmd_publish(const GlobalArgs& g, const PublishArgs& a);
int cmd_verify(const GlobalArgs& g, const VerifyArgs& a);
int cmd_demo_teleport(const GlobalArgs& g, const TeleportArgs& a);
int cmd_demo_grover(const GlobalArgs& g, const GroverArgs& a);
int cmd_demo_flip(const GlobalArgs& g, const FlipArgs& a);

}  // namespace pulsegate::cli
