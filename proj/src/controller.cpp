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

#include "floodwatch/controller.hpp"

namespace fw {

const char* node_state_name(NodeState s) {
  switch (s) {
    case NodeState::Benign: return "BENIGN";
    case NodeState::Suspect: return "SUSPECT";
    case NodeState::Flagged: return "FLAGGED";
  }
  return "NodeState";
}

Controller::Controller(ControllerConfig config) : config_(config) {
  if (config_.confirm_k < 1)
    throw Error(Errc::ConfigInvalid, "confirm_k must be >= 1");
  if (config_.propagation_delay_s < 0)
    throw Error(Errc::ConfigInvalid, "propagation delay must be >= 0");
}

void Controller::register_switch(const std::string& switch_id, SwitchState* sw) {
  switches_[switch_id] = sw;
}

bool Controller::knows_switch(const std::string& switch_id) const {
  return switches_.count(switch_id) != 0;
}

std::vector<SouthboundCommand> Controller::handle_event(const ControllerEvent& event) {
  std::vector<SouthboundCommand> commands;

  if (const Alert* alert = std::get_if<Alert>(&event)) {
    NodeStatus& node = nodes_[alert->dst_addr];
    node.addr = alert->dst_addr;
    node.alert_windows.insert(alert->window_index);
    if (node.state == NodeState::Flagged) return commands;  // absorbing

    node.state = NodeState::Suspect;
    if (node.alert_windows.size() >= config_.confirm_k) {
      node.state = NodeState::Flagged;
      node.flagged_at = alert->timestamp_s;
      if (rule_index_.emplace(alert->switch_id, alert->dst_addr).second) {
        MitigationRule rule;
        rule.switch_id = alert->switch_id;
        rule.key = alert->dst_addr;
        rules_.push_back(rule);
        commands.push_back(InstallRuleCommand{alert->switch_id, rule.table, alert->dst_addr});
      }
    }
    return commands;
  }

  if (std::holds_alternative<ParseFailed>(event)) {
    ++parse_failures_seen_;
    return commands;
  }
  if (std::holds_alternative<Diagnostic>(event)) {
    ++diagnostics_seen_;
    return commands;
  }
  // CounterSnapshot: stats only, nothing to do.
  return commands;
}

CounterSnapshot Controller::poll_counters(const std::string& switch_id,
                                          const std::string& counter) {
  auto it = switches_.find(switch_id);
  if (it == switches_.end() || it->second == nullptr)
    throw Error(Errc::UnknownSwitch, "'" + switch_id + "'");
  CounterSnapshot snap;
  snap.switch_id = switch_id;
  snap.counter = counter;
  snap.entries = read_counters(*it->second, counter);
  return snap;
}

}  // namespace fw
