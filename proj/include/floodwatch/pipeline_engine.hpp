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

#ifndef FLOODWATCH_PIPELINE_ENGINE_HPP_
#define FLOODWATCH_PIPELINE_ENGINE_HPP_

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "floodwatch/events.hpp"
#include "floodwatch/parser_engine.hpp"

namespace fw {

// ----- actions ------------------------------------------------------------

struct ActNop {};
struct ActCounterIncr { std::string counter; };
struct ActSetField { std::string header; std::string field; u128 value = 0; };
struct ActDrop {};
struct ActForward { int port = 0; };
struct ActToController { std::string reason; };

using ActionSpec =
    std::variant<ActNop, ActCounterIncr, ActSetField, ActDrop, ActForward, ActToController>;

std::string action_name(const ActionSpec& a);

// ----- keyed counters -------------------------------------------------------

struct CounterHit {
  std::uint64_t count = 0;     // post-increment
  std::int64_t window_index = 0;
};

inline std::int64_t window_index_of(double ts, double window_s) {
  return static_cast<std::int64_t>(std::floor(ts / window_s));
}

// Per-key packet counter over tumbling time windows. A cell holds one count
// and the window it belongs to; the count restarts whenever the window index
// moves on. Cell admission is first-come up to capacity and cells are never
// evicted within a run.
class KeyedCounter {
 public:
  KeyedCounter() = default;
  KeyedCounter(std::string name, std::size_t capacity, double window_s);

  const std::string& name() const { return name_; }
  std::size_t capacity() const { return capacity_; }
  double window_s() const { return window_s_; }
  std::size_t cell_count() const { return cells_.size(); }
  std::uint64_t capacity_skips() const { return capacity_skips_; }

  // Post-increment count for the key's current window, or nullopt when the
  // key has no cell and capacity is exhausted (the increment is skipped and
  // tallied in capacity_skips).
  std::optional<CounterHit> increment(u128 key, double timestamp_s);

  // Read-only, sorted by key.
  std::vector<CounterSnapshotEntry> snapshot() const;

 private:
  struct Cell {
    std::uint64_t count = 0;
    std::int64_t window_index = 0;
  };
  struct KeyHash {
    std::size_t operator()(u128 k) const {
      return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(k) ^
                                        static_cast<std::uint64_t>(k >> 64) * 0x9E3779B97F4A7C15ull);
    }
  };

  std::string name_;
  std::size_t capacity_ = 0;
  double window_s_ = 1.0;
  std::unordered_map<u128, Cell, KeyHash> cells_;
  std::uint64_t capacity_skips_ = 0;
};

// ----- match-action tables --------------------------------------------------

struct TableKey {
  std::string header;
  std::string field;
  // match kind is always EXACT
};

struct TableStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t full_drops = 0;  // learn attempts refused because the table was full
};

// Exact-match table. Optionally learns an entry on miss (bounded by
// max_size), which is how the destination counter table populates itself
// without control-plane installs. Keys listed in excluded_keys bypass the
// table entirely.
class Table {
 public:
  Table() = default;
  Table(std::string name, TableKey key, std::size_t max_size,
        ActionSpec default_action = ActNop{});

  const std::string& name() const { return name_; }
  const TableKey& key() const { return key_; }
  std::size_t max_size() const { return max_size_; }
  std::size_t entry_count() const { return entries_.size(); }
  const TableStats& stats() const { return stats_; }
  const ActionSpec& default_action() const { return default_action_; }

  void set_auto_learn(ActionSpec learn_action);
  void exclude_key(u128 key);
  bool is_excluded(u128 key) const;

  // Control-plane install/overwrite. Throws TableFull.
  void install(u128 key, ActionSpec action);
  const ActionSpec* lookup(u128 key) const;
  bool has_entry(u128 key) const { return lookup(key) != nullptr; }

  // Data-plane lookup: returns the action to run and updates hit/miss stats;
  // learns on miss when auto-learn is enabled.
  const ActionSpec& apply(u128 key);

 private:
  struct KeyHash {
    std::size_t operator()(u128 k) const {
      return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(k) ^
                                        static_cast<std::uint64_t>(k >> 64) * 0x9E3779B97F4A7C15ull);
    }
  };

  std::string name_;
  TableKey key_;
  std::size_t max_size_ = 0;
  ActionSpec default_action_ = ActNop{};
  bool auto_learn_ = false;
  ActionSpec learn_action_ = ActNop{};
  std::vector<u128> excluded_keys_;
  std::unordered_map<u128, ActionSpec, KeyHash> entries_;
  TableStats stats_;
};

// ----- the switch -----------------------------------------------------------

struct PacketVerdict {
  enum class Kind { Forward, Drop, ForwardWithCopy };
  Kind kind = Kind::Forward;
  int egress_port = 0;
  std::vector<ControllerEvent> events;
};

const char* verdict_name(PacketVerdict::Kind k);

struct ProcessResult {
  PacketVerdict verdict;
  std::optional<std::vector<std::uint8_t>> output;  // present iff forwarding
  std::optional<ParsedPacket> parsed;               // absent on parse failure
};

// Policy hook: given an increment outcome for a parsed packet, decide whether
// to raise an Alert. Installed by the CPS profile.
using Detector = std::function<std::optional<Alert>(const ParsedPacket&, u128 key,
                                                    const CounterHit&, double ts)>;

// Optional per-stage hook; a null function is the identity.
using StageHook = std::function<void(ParsedPacket&)>;

// The fixed six-stage pipeline a packet traverses.
inline constexpr std::array<std::string_view, 6> kPipelineStages = {
    "Parser", "VerifyChecksum", "Ingress", "Egress", "ComputeChecksum", "Deparser"};

// One software switch: parse graph, schemas, the ordered ingress tables,
// counters and hooks. Single-driver: one thread processes packets in
// timestamp order; installs happen between packets.
struct SwitchState {
  std::string id = "s1";
  SchemaSet schemas;
  ParseGraph graph;
  std::vector<std::string> ingress_tables;  // applied in this order
  std::unordered_map<std::string, Table> tables;
  std::unordered_map<std::string, KeyedCounter> counters;
  StageHook verify_checksum_hook;  // identity when null
  StageHook egress_hook;           // identity when null
  StageHook compute_checksum_hook; // identity when null
  Detector detector;
  int default_port = 1;
  std::vector<std::string>* stage_trace = nullptr;  // test introspection
};

// Runs one packet through the six stages. Never throws for data-plane
// conditions: parse failures and internal faults become Drop verdicts with a
// diagnostic event attached.
ProcessResult process_packet(SwitchState& sw, std::span<const std::uint8_t> raw,
                             const PacketMeta& meta);

// Control-plane entry install. Throws NoSuchTable / TableFull / ActionInvalid.
void install_entry(SwitchState& sw, const std::string& table_name, u128 key,
                   ActionSpec action);

// Read-only counter snapshot. Throws NoSuchCounter.
std::vector<CounterSnapshotEntry> read_counters(const SwitchState& sw,
                                                const std::string& counter_name);

}  // namespace fw

#endif  // FLOODWATCH_PIPELINE_ENGINE_HPP_
