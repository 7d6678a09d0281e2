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

#include "pulsegate/core/channel.hpp"

#include <charconv>

#include "pulsegate/core/errors.hpp"

namespace pulsegate {

std::string_view kind_prefix(ChannelKind k) {
  switch (k) {
    case ChannelKind::drive:
      return "d";
    case ChannelKind::control:
      return "u";
    case ChannelKind::measure:
      return "m";
    case ChannelKind::acquire:
      return "a";
  }
  return "?";
}

std::string to_string(Channel c) {
  return std::string(kind_prefix(c.kind)) + std::to_string(c.index);
}

Channel parse_channel(std::string_view name) {
  if (name.size() < 2) throw InvalidArgument("bad channel name '" + std::string(name) + "'");
  Channel c;
  switch (name[0]) {
    case 'd':
      c.kind = ChannelKind::drive;
      break;
    case 'u':
      c.kind = ChannelKind::control;
      break;
    case 'm':
      c.kind = ChannelKind::measure;
      break;
    case 'a':
      c.kind = ChannelKind::acquire;
      break;
    default:
      throw InvalidArgument("bad channel name '" + std::string(name) + "'");
  }
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c.index);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || c.index < 0) {
    throw InvalidArgument("bad channel name '" + std::string(name) + "'");
  }
  return c;
}

}  // namespace pulsegate
