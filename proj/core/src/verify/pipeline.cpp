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

#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pulsegate::verify {

namespace {

VerificationReport skipped(Stage s, const Tolerances& tol) {
  VerificationReport r;
  r.stage = s;
  r.skipped = true;
  r.tolerances = tol;
  return r;
}

}  // namespace

PipelineResult verify_pipeline(const GateCircuit& c, const TrustedRecord& trusted,
                               const CalibrationSnapshot& calib, const Tolerances& tol) {
  tol.validate();
  PipelineResult out;
  auto channel = verify_channels(c, calib);
  channel.tolerances = tol;
  const bool channel_ok = channel.passed();
  out.reports.push_back(std::move(channel));
  if (!channel_ok) {
    for (Stage s : {Stage::reference, Stage::syntax, Stage::semantics}) {
      out.reports.push_back(skipped(s, tol));
    }
    return out;
  }

  auto reference = verify_reference(c, trusted, calib);
  reference.tolerances = tol;
  const bool reference_ok = reference.passed();
  out.reports.push_back(std::move(reference));

  if (reference_ok) {
    const Schedule observed = lower::lower_circuit(c, calib, lower::LoweringMode::permissive);
    out.reports.push_back(verify_syntax(observed, trusted, calib, tol));
  } else {
    out.reports.push_back(skipped(Stage::syntax, tol));
  }
  out.reports.push_back(verify_semantics(c, calib, tol, &trusted.circuit));
  return out;
}

}  // namespace pulsegate::verify
