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

#include "pulsegate/verify/report.hpp"

#include <algorithm>
#include <cmath>

namespace pulsegate::verify {

namespace {

constexpr std::string_view kStages[] = {"channel", "reference", "syntax", "semantics"};
constexpr std::string_view kSeverities[] = {"info", "warning", "error"};

}  // namespace

std::string_view to_string(Stage s) { return kStages[static_cast<int>(s)]; }
std::string_view to_string(Severity s) { return kSeverities[static_cast<int>(s)]; }

Stage parse_stage(std::string_view s) {
  for (int i = 0; i < 4; ++i) {
    if (kStages[i] == s) return static_cast<Stage>(i);
  }
  throw InvalidArgument("unknown stage '" + std::string(s) + "'");
}

void Tolerances::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!ok(freq_tol) || !ok(phase_tol) || !ok(amp_rel_tol) || duration_tol < 0) {
    throw InvalidArgument("tolerances must be non-negative");
  }
  if (!(fidelity_threshold > 0.0 && fidelity_threshold <= 1.0)) {
    throw InvalidArgument("fidelity_threshold must lie in (0, 1]");
  }
}

json to_json(const Tolerances& t) {
  return {{"freq_tol", t.freq_tol},
          {"phase_tol", t.phase_tol},
          {"amp_rel_tol", t.amp_rel_tol},
          {"duration_tol", t.duration_tol},
          {"fidelity_threshold", t.fidelity_threshold}};
}

Tolerances tolerances_from_json(const json& j) {
  Tolerances t;
  try {
    t.freq_tol = j.value("freq_tol", t.freq_tol);
    t.phase_tol = j.value("phase_tol", t.phase_tol);
    t.amp_rel_tol = j.value("amp_rel_tol", t.amp_rel_tol);
    t.duration_tol = j.value("duration_tol", t.duration_tol);
    t.fidelity_threshold = j.value("fidelity_threshold", t.fidelity_threshold);
  } catch (const json::exception& e) {
    throw SchemaError("", std::string("bad tolerances: ") + e.what());
  }
  t.validate();
  return t;
}

json to_json(const Finding& f) {
  return {{"severity", to_string(f.severity)}, {"kind", f.kind},
          {"location", f.location},           {"explanation", f.explanation},
          {"expected", f.expected},           {"observed", f.observed}};
}

std::optional<attack::AttackKind> hypothesis(const Finding& f) {
  for (auto k : attack::kAllAttackKinds) {
    if (attack::to_string(k) == f.kind) return k;
  }
  return std::nullopt;
}

bool VerificationReport::passed() const { return error_count() == 0; }

std::size_t VerificationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(), [](const Finding& f) {
    return f.severity == Severity::error;
  }));
}

json to_json(const VerificationReport& r) {
  json fs = json::array();
  for (const auto& f : r.findings) fs.push_back(to_json(f));
  return {{"stage", to_string(r.stage)},
          {"skipped", r.skipped},
          {"verdict", r.passed() ? "pass" : "fail"},
          {"findings", fs},
          {"tolerances", to_json(r.tolerances)}};
}

bool PipelineResult::passed() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed(); });
}

std::optional<Stage> PipelineResult::failed_stage() const {
  for (const auto& r : reports) {
    if (!r.passed()) return r.stage;
  }
  return std::nullopt;
}

const VerificationReport* PipelineResult::report(Stage s) const {
  for (const auto& r : reports) {
    if (r.stage == s) return &r;
  }
  return nullptr;
}

json to_json(const PipelineResult& r) {
  json rs = json::array();
  for (const auto& x : r.reports) rs.push_back(to_json(x));
  json out = {{"verdict", r.passed() ? "pass" : "fail"}, {"reports", rs}};
  if (auto s = r.failed_stage()) out["failed_stage"] = to_string(*s);
  return out;
}

}  // namespace pulsegate::verify
