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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "pulsegate/core/hash.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pulsegate::verify {

namespace fs = std::filesystem;

namespace {

constexpr const char* kRecordFile = "record.json";
constexpr const char* kCircuitFile = "circuit.json";
constexpr const char* kScheduleFile = "schedule.json";
constexpr const char* kCalibrationFile = "calibration.json";

bool valid_hash(const std::string& h) {
  return h.size() == 64 &&
         std::all_of(h.begin(), h.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); });
}

void write_atomic(const fs::path& target, const std::string& bytes) {
  std::random_device rd;
  const fs::path tmp = target.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StoreError("cannot write " + tmp.string());
    out << bytes;
    if (!out.flush()) throw StoreError("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StoreError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TrustedRecord make_record(const GateCircuit& circuit, const Schedule& schedule,
                          const CalibrationSnapshot& calib) {
  TrustedRecord r;
  r.circuit = circuit;
  r.schedule = schedule;
  r.calibration = calib;
  r.circuit_hash = gate_level_hash(circuit);
  r.document_hash = content_hash(circuit);
  r.schedule_hash = content_hash(schedule);
  r.calibration_hash = content_hash(calib);
  r.timestamp = calib.timestamp;
  return r;
}

bool hashes_consistent(const TrustedRecord& r) {
  return r.circuit_hash == gate_level_hash(r.circuit) &&
         r.document_hash == content_hash(r.circuit) &&
         r.schedule_hash == content_hash(r.schedule) &&
         r.calibration_hash == content_hash(r.calibration);
}

TrustedStore::TrustedStore(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_);
}

TrustedRecord TrustedStore::publish(const GateCircuit& circuit, const Schedule& schedule,
                                    const CalibrationSnapshot& calib) {
  Schedule lowered;
  try {
    lowered = lower::lower_circuit(circuit, calib, lower::LoweringMode::strict);
  } catch (const Error& e) {
    throw PublishRejected(std::string("circuit does not lower strictly: ") + e.what());
  }
  if (!(lowered == schedule)) {
    throw PublishRejected("schedule is not the strict lowering of the circuit");
  }
  if (auto r = verify_channels(circuit, calib); !r.passed()) {
    throw PublishRejected("channel check failed: " + r.findings.front().explanation);
  }
  if (auto r = verify_semantics(circuit, calib); !r.passed()) {
    throw PublishRejected("semantics check failed: " + r.findings.front().explanation);
  }
  TrustedRecord rec = make_record(circuit, schedule, calib);
  const json meta = {{"circuit_hash", rec.circuit_hash},
                     {"document_hash", rec.document_hash},
                     {"schedule_hash", rec.schedule_hash},
                     {"calibration_hash", rec.calibration_hash},
                     {"timestamp", rec.timestamp}};
  std::unique_lock lock(mu_);
  const fs::path dir = root_ / rec.circuit_hash;
  fs::create_directories(dir);
  write_atomic(dir / kCircuitFile, canonical_serialize(circuit));
  write_atomic(dir / kScheduleFile, canonical_serialize(schedule));
  write_atomic(dir / kCalibrationFile, canonical_serialize(calib));
  // The record goes last: it is what makes the entry visible.
  write_atomic(dir / kRecordFile, canonical_dump(meta));
  return rec;
}

bool TrustedStore::contains(const std::string& circuit_hash) const {
  if (!valid_hash(circuit_hash)) return false;
  std::shared_lock lock(mu_);
  return fs::exists(root_ / circuit_hash / kRecordFile);
}

TrustedRecord TrustedStore::fetch(const std::string& circuit_hash) const {
  if (!valid_hash(circuit_hash)) throw RecordNotFound("not a circuit hash: " + circuit_hash);
  const fs::path dir = root_ / circuit_hash;
  std::string problem;
  {
    std::shared_lock lock(mu_);
    if (!fs::exists(dir / kRecordFile)) throw RecordNotFound("no record for " + circuit_hash);
    try {
      const json meta = json::parse(read_file(dir / kRecordFile));
      TrustedRecord r;
      r.circuit_hash = meta.at("circuit_hash").get<std::string>();
      r.document_hash = meta.at("document_hash").get<std::string>();
      r.schedule_hash = meta.at("schedule_hash").get<std::string>();
      r.calibration_hash = meta.at("calibration_hash").get<std::string>();
      r.timestamp = meta.at("timestamp").get<std::int64_t>();
      r.circuit = deserialize<GateCircuit>(read_file(dir / kCircuitFile));
      r.schedule = deserialize<Schedule>(read_file(dir / kScheduleFile));
      r.calibration = deserialize<CalibrationSnapshot>(read_file(dir / kCalibrationFile));
      if (r.circuit_hash == circuit_hash && hashes_consistent(r)) return r;
      problem = "stored hashes do not match the stored documents";
    } catch (const StoreError&) {
      throw;
    } catch (const std::exception& e) {
      problem = std::string("unreadable record: ") + e.what();
    }
  }
  std::unique_lock lock(mu_);
  const fs::path qdir = root_ / "quarantine";
  fs::create_directories(qdir);
  fs::path dest = qdir / circuit_hash;
  for (int k = 1; fs::exists(dest); ++k) dest = qdir / (circuit_hash + "." + std::to_string(k));
  if (fs::exists(dir)) fs::rename(dir, dest);
  throw QuarantineError("record " + circuit_hash + " quarantined: " + problem);
}

}  // namespace pulsegate::verify
