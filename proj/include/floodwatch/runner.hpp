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

#ifndef FLOODWATCH_RUNNER_HPP_
#define FLOODWATCH_RUNNER_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floodwatch/controller.hpp"
#include "floodwatch/simnet.hpp"

namespace fw {

struct InstalledRule {
  double ts = 0.0;
  std::string switch_id;
  std::string table;
  std::uint64_t key = 0;
  std::string action = "drop";
  // Forwarded-packet count toward key when the rule took effect; with the
  // blocklist ahead of the counter table this total stays frozen afterwards.
  std::uint64_t forwarded_to_key_at_install = 0;
};

struct RunReport {
  std::uint64_t packets_in = 0;
  std::uint64_t forwarded = 0;
  std::uint64_t dropped = 0;
  std::uint64_t parse_failures = 0;
  std::vector<Alert> alerts;
  std::vector<InstalledRule> rules_installed;
  // Forwarded unicast HELLO frames per destination.
  std::map<std::uint64_t, std::uint64_t> per_dst_counts;
  std::vector<CounterSnapshotEntry> final_counters;

  std::string to_json() const;
};

struct RunOptions {
  ControllerConfig controller;
  bool mitigation = true;      // when false, alerts are observed but nothing installs
  std::ostream* log = nullptr; // southbound JSON lines + '#' summaries
  std::string switch_id = "s1";
};

// Southbound wire encodings (newline-delimited JSON).
std::string alert_json(const Alert& alert);
std::string install_json(const InstallRuleCommand& cmd);
std::string read_counters_json(const ReadCountersCommand& cmd);

// Drives records through one profile switch in timestamp order, routes
// events to the controller and applies its commands between packets.
RunReport run_records(const std::vector<PacketRecord>& records, const ProfileConfig& profile,
                      const RunOptions& options = {});

// generate + run_records.
RunReport run_scenario(const ScenarioConfig& scenario, const RunOptions& options = {});

// Counter snapshot as CSV: key_hex,count,window_index.
std::string counters_csv(const std::vector<CounterSnapshotEntry>& entries);

}  // namespace fw

#endif  // FLOODWATCH_RUNNER_HPP_
