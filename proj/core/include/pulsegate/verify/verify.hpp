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

#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/circuit.hpp"
#include "pulsegate/verify/report.hpp"
#include "pulsegate/verify/store.hpp"

namespace pulsegate::verify {

// Every custom gate must put at least one pulse on each declared qubit and
// none on any other qubit; Acquires must write declared clbits.
VerificationReport verify_channels(const GateCircuit& c, const CalibrationSnapshot& calib);

// Per-channel occupying instruction sequence (kind, start) of the incoming
// circuit, lowered permissively under `calib`, against the trusted schedule.
VerificationReport verify_reference(const GateCircuit& c, const TrustedRecord& trusted,
                                    const CalibrationSnapshot& calib);

// Parameter-wise comparison of `observed` to the trusted schedule. Play
// amplitudes are compared after scaling by the calibration drift factor of
// their channel; inserted frame changes are checked absolutely.
VerificationReport verify_syntax(const Schedule& observed, const TrustedRecord& trusted,
                                 const CalibrationSnapshot& calib, const Tolerances& tol = {});

// Noiseless unitary of each bound custom gate against its declared unitary,
// over the declared qubits plus any qubit the pulses reach. `trusted`, when
// given, supplies reference gates for the structural DAG comparison.
VerificationReport verify_semantics(const GateCircuit& c, const CalibrationSnapshot& calib,
                                    const Tolerances& tol = {},
                                    const GateCircuit* trusted = nullptr);

// One gate, as placed by `op`.
VerificationReport verify_semantics(const GateOp& op, const CalibrationSnapshot& calib,
                                    const Tolerances& tol = {},
                                    const GateOp* trusted = nullptr);

// Weisfeiler-Lehman digest of a schedule's instruction DAG (nodes are
// instructions labelled by kind and channel kind; edges follow channel order
// and join instructions that start together).
std::string dag_digest(const Schedule& s);

// channel -> reference -> syntax -> semantics. A channel failure skips the
// rest; a reference failure skips syntax.
PipelineResult verify_pipeline(const GateCircuit& c, const TrustedRecord& trusted,
                               const CalibrationSnapshot& calib, const Tolerances& tol = {});

}  // namespace pulsegate::verify
