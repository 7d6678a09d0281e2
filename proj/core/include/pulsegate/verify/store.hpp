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
#include <filesystem>
#include <shared_mutex>
#include <string>

#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/circuit.hpp"
#include "pulsegate/core/errors.hpp"
#include "pulsegate/core/schedule.hpp"

namespace pulsegate::verify {

// A circuit, the pulse schedule it lowers to, and the calibration that
// lowering used. circuit_hash is the gate-level hash, so a tampered pulse
// configuration still finds its reference.
struct TrustedRecord {
  std::string circuit_hash;
  std::string document_hash;  // full circuit document, pulses included
  std::string schedule_hash;
  std::string calibration_hash;
  std::int64_t timestamp = 0;
  GateCircuit circuit;
  Schedule schedule;
  CalibrationSnapshot calibration;

  bool operator==(const TrustedRecord&) const = default;
};

TrustedRecord make_record(const GateCircuit& circuit, const Schedule& schedule,
                          const CalibrationSnapshot& calib);
// True when every stored hash matches its recomputed value.
bool hashes_consistent(const TrustedRecord& r);

class StoreError : public Error {
 public:
  using Error::Error;
};

class RecordNotFound : public StoreError {
 public:
  using StoreError::StoreError;
};

class QuarantineError : public StoreError {
 public:
  using StoreError::StoreError;
};

class PublishRejected : public StoreError {
 public:
  using StoreError::StoreError;
};

// Content-addressed directory: <root>/<circuit-hash>/{record,circuit,
// schedule,calibration}.json. One writer at a time, any number of readers.
class TrustedStore {
 public:
  explicit TrustedStore(std::filesystem::path root);

  // Rejects inputs that do not belong together: the schedule must be the
  // strict lowering of the circuit under `calib`, and every custom gate
  // must pass the channel and semantics checks.
  TrustedRecord publish(const GateCircuit& circuit, const Schedule& schedule,
                        const CalibrationSnapshot& calib);
  // Latest record for `circuit_hash`. A record whose hashes do not match is
  // moved under <root>/quarantine and reported with QuarantineError.
  TrustedRecord fetch(const std::string& circuit_hash) const;
  bool contains(const std::string& circuit_hash) const;

  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
  mutable std::shared_mutex mu_;
};

}  // namespace pulsegate::verify
