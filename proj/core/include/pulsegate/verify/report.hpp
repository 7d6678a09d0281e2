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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pulsegate/attacks/tamper.hpp"
#include "pulsegate/core/serialize.hpp"

namespace pulsegate::verify {

enum class Stage { channel, reference, syntax, semantics };
enum class Severity { info, warning, error };

std::string_view to_string(Stage s);
std::string_view to_string(Severity s);
Stage parse_stage(std::string_view s);

struct Tolerances {
  double freq_tol = 1e-3;     // GHz
  double phase_tol = 1e-6;    // rad
  double amp_rel_tol = 0.02;  // relative
  std::int64_t duration_tol = 0;
  double fidelity_threshold = 0.99;

  // Throws InvalidArgument when out of range.
  void validate() const;
};

json to_json(const Tolerances& t);
Tolerances tolerances_from_json(const json& j);

// `kind` is an attack kind name ("plunder", "timing", ...) when the finding
// points at one, otherwise a check name such as "hash-mismatch",
// "clbit-mismatch", "structure", "semantics" or "unverifiable-semantics".
struct Finding {
  Severity severity = Severity::error;
  std::string kind;
  std::string location;
  std::string explanation;
  json expected;
  json observed;
};

json to_json(const Finding& f);

// The attack the finding names, if any.
std::optional<attack::AttackKind> hypothesis(const Finding& f);

struct VerificationReport {
  Stage stage = Stage::channel;
  bool skipped = false;
  std::vector<Finding> findings;
  Tolerances tolerances;

  bool passed() const;
  std::size_t error_count() const;
};

json to_json(const VerificationReport& r);

struct PipelineResult {
  std::vector<VerificationReport> reports;

  bool passed() const;
  // First stage reporting an error.
  std::optional<Stage> failed_stage() const;
  const VerificationReport* report(Stage s) const;
};

json to_json(const PipelineResult& r);

}  // namespace pulsegate::verify
