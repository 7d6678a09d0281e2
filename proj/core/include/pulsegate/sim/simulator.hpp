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
#include <string>
#include <vector>

#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/errors.hpp"
#include "pulsegate/core/schedule.hpp"
#include "pulsegate/sim/density.hpp"
#include "pulsegate/sim/frame.hpp"

namespace pulsegate::sim {

class SimulationError : public Error {
 public:
  using Error::Error;
};

struct SimOptions {
  bool noise = false;              // T1/T2 during Delay and idle gaps
  bool noise_during_play = false;  // also decay while a Play runs
  int substep = 1;                 // samples per integration step
  std::int64_t shots = 1024;
  std::uint64_t seed = 0;
  bool misalignment_model = true;
  int num_clbits = 0;  // 0: one past the highest memory slot used
};

// Propagator of one Play in the frame of `frame`: per step k the generator
// (dtheta/2)(cos phi sx + sin phi sy) + pi*detuning*dt*sz with
// dtheta = sign*scale*|s_k|*dt and phi = frame.phase + extra_phase + arg(s_k),
// followed by the frame-back rotation exp(+i pi detuning T sz). A frame
// inside the forbidden band couples to nothing.
Mat2 play_propagator(const std::vector<cplx>& samples, const FrameState& frame,
                     double qubit_frequency, double scale, double sign,
                     const CalibrationSnapshot& calib, int substep, double extra_phase = 0.0);

// Extra frame phase of a Play starting off the alignment grid.
double misalignment_phase(const FrameState& frame, std::int64_t start,
                          const TimingConstraints& tc);

// Applies one Play on a device drive or control channel to a full device
// state (one qubit per device qubit).
DensityState evolve_play(DensityState state, Channel channel, const Waveform& waveform,
                         const FrameState& frame, const CalibrationSnapshot& calib,
                         const SimOptions& options, std::int64_t start_time = 0);

// Free evolution of `qubit` for `duration` samples; identity with noise off.
DensityState evolve_delay(DensityState state, int qubit, std::int64_t duration,
                          const CalibrationSnapshot& calib, const SimOptions& options);

// Noiseless propagator over all device qubits, expressed in each qubit's
// drive frame. Rejects Acquire and measure-channel Plays.
Matrix simulate_unitary(const Schedule& s, const CalibrationSnapshot& calib,
                        const SimOptions& options = {});
// As above over `qubits` only (qubits[0] = low bit). Channels touching any
// other qubit are rejected.
Matrix simulate_unitary_on(const Schedule& s, const CalibrationSnapshot& calib,
                           const std::vector<int>& qubits, const SimOptions& options = {});

struct ShotResult {
  int num_clbits = 0;
  std::map<std::string, std::int64_t> counts;  // clbit 0 rightmost
  std::map<std::string, double> probabilities;
  DensityState state;  // final state, averaged over outcomes
};

ShotResult simulate_shots(const Schedule& s, const CalibrationSnapshot& calib,
                          const SimOptions& options);

// Final state with no sampling.
DensityState simulate_density(const Schedule& s, const CalibrationSnapshot& calib,
                              const SimOptions& options = {});

// Marginal frequency of clbit `bit` reading 1.
double marginal_one(const std::map<std::string, std::int64_t>& counts, int bit);
double marginal_one(const std::map<std::string, double>& probabilities, int bit);

}  // namespace pulsegate::sim
