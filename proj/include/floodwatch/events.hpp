/* Copyright 2026-present The Floodwatch Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FLOODWATCH_EVENTS_HPP_
#define FLOODWATCH_EVENTS_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "floodwatch/common.hpp"

namespace fw {

// Controller-bound detection event: a destination crossed the per-window
// packet threshold on some switch.
struct Alert {
  std::string switch_id;
  std::uint64_t dst_addr = 0;
  std::uint64_t count = 0;
  std::int64_t window_index = 0;
  double timestamp_s = 0.0;
};

inline bool operator==(const Alert& a, const Alert& b) {
  return a.switch_id == b.switch_id && a.dst_addr == b.dst_addr && a.count == b.count &&
         a.window_index == b.window_index && a.timestamp_s == b.timestamp_s;
}

struct ParseFailed {
  std::string switch_id;
  double timestamp_s = 0.0;
  std::string reason;
};

struct CounterSnapshotEntry {
  u128 key = 0;
  std::uint64_t count = 0;
  std::int64_t window_index = 0;
};

struct CounterSnapshot {
  std::string switch_id;
  std::string counter;
  std::vector<CounterSnapshotEntry> entries;
};

// Non-fatal pipeline diagnostic (e.g. a table key whose header was never
// extracted, or a packet copied to the controller).
struct Diagnostic {
  std::string switch_id;
  double timestamp_s = 0.0;
  std::string reason;
};

using ControllerEvent = std::variant<Alert, ParseFailed, CounterSnapshot, Diagnostic>;

}  // namespace fw

#endif  // FLOODWATCH_EVENTS_HPP_
