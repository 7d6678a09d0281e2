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

#include <filesystem>
#include <optional>
#include <string>

#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/serialize.hpp"

namespace pulsegate::cli {

// Usage or I/O problem; maps to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_text(const std::filesystem::path& p);

// Writes to `p`, or to stdout when `p` is empty or "-".
void write_text(const std::string& p, const std::string& text);

// Parses a JSON file and decodes it; schema errors name the file.
json read_json(const std::filesystem::path& p);

template <class T>
T load(const std::filesystem::path& p) {
  const json j = read_json(p);
  try {
    return from_json<T>(j, "");
  } catch (const SchemaError& e) {
    std::string msg = e.what();
    const std::string prefix = e.path() + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    throw SchemaError(p.string() + ":" + e.path(), msg);
  }
}

CalibrationSnapshot load_calibration(const std::optional<std::string>& p);

// "0-1,1-0" or "0:1 1:0".
std::vector<std::pair<int, int>> parse_coupling(const std::string& text);

}  // namespace pulsegate::cli
