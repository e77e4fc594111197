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

#ifndef FLOODWATCH_CONTROLLER_HPP_
#define FLOODWATCH_CONTROLLER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "floodwatch/pipeline_engine.hpp"

namespace fw {

enum class NodeState { Benign, Suspect, Flagged };

const char* node_state_name(NodeState s);

// Per-address record the controller keeps. FLAGGED is absorbing for the run.
struct NodeStatus {
  std::uint64_t addr = 0;
  NodeState state = NodeState::Benign;
  std::set<std::int64_t> alert_windows;
  std::optional<double> flagged_at;
};

// Switch-bound drop-rule install for a flagged destination.
struct MitigationRule {
  std::string switch_id;
  std::string table = "blocklist";
  std::uint64_t key = 0;
  std::string action = "drop";
};

inline bool operator==(const MitigationRule& a, const MitigationRule& b) {
  return a.switch_id == b.switch_id && a.table == b.table && a.key == b.key &&
         a.action == b.action;
}

struct InstallRuleCommand {
  std::string switch_id;
  std::string table;
  std::uint64_t key = 0;
};

struct ReadCountersCommand {
  std::string switch_id;
  std::string counter;
};

using SouthboundCommand = std::variant<InstallRuleCommand, ReadCountersCommand>;

struct ControllerConfig {
  std::size_t confirm_k = 1;       // alert windows required before flagging
  double propagation_delay_s = 0;  // install latency applied by the driver
};

// Deterministic event-loop controller: consumes switch events in emission
// order, tracks per-node status, and emits blocklist installs southbound.
// Commands are applied back to switches by the run driver between packets.
class Controller {
 public:
  explicit Controller(ControllerConfig config = {});

  void register_switch(const std::string& switch_id, SwitchState* sw);
  bool knows_switch(const std::string& switch_id) const;

  // Alert events update node status and may emit one install command;
  // everything else is logged only.
  std::vector<SouthboundCommand> handle_event(const ControllerEvent& event);

  // Issues a read_counters southbound to a registered switch.
  // Throws UnknownSwitch / NoSuchCounter.
  CounterSnapshot poll_counters(const std::string& switch_id,
                                const std::string& counter = "dstnodecounter");

  const ControllerConfig& config() const { return config_; }
  const std::map<std::uint64_t, NodeStatus>& nodes() const { return nodes_; }
  const std::vector<MitigationRule>& rules() const { return rules_; }
  std::uint64_t parse_failures_seen() const { return parse_failures_seen_; }
  std::uint64_t diagnostics_seen() const { return diagnostics_seen_; }

 private:
  ControllerConfig config_;
  std::map<std::string, SwitchState*> switches_;
  std::map<std::uint64_t, NodeStatus> nodes_;
  std::vector<MitigationRule> rules_;
  std::set<std::pair<std::string, std::uint64_t>> rule_index_;
  std::uint64_t parse_failures_seen_ = 0;
  std::uint64_t diagnostics_seen_ = 0;
};

}  // namespace fw

#endif  // FLOODWATCH_CONTROLLER_HPP_
