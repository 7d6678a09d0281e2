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

#include "io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace pulsegate::cli {

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& p, const std::string& text) {
  if (p.empty() || p == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + p);
  out << text;
  if (!out) throw UsageError("write failed: " + p);
}

json read_json(const std::filesystem::path& p) {
  const std::string text = read_text(p);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(p.string(), std::string("malformed JSON: ") + e.what());
  }
}

CalibrationSnapshot load_calibration(const std::optional<std::string>& p) {
  if (!p) throw UsageError("--calib FILE is required");
  auto c = load<CalibrationSnapshot>(*p);
  validate(c);
  return c;
}

std::vector<std::pair<int, int>> parse_coupling(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::string norm = text;
  for (char& ch : norm) {
    if (ch == ',' || ch == ';') ch = ' ';
    if (ch == ':' || ch == '>') ch = '-';
  }
  std::istringstream ss(norm);
  std::string tok;
  while (ss >> tok) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
      throw UsageError("bad coupling entry '" + tok + "', expected C-T");
    try {
      std::size_t used = 0;
      const int c = std::stoi(tok.substr(0, dash), &used);
      if (used != dash) throw std::invalid_argument(tok);
      const std::string rest = tok.substr(dash + 1);
      const int t = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(tok);
      out.emplace_back(c, t);
    } catch (const std::logic_error&) {
      throw UsageError("bad coupling entry '" + tok + "', expected C-T");
    }
  }
  return out;
}

}  // namespace pulsegate::cli
