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

#include "floodwatch/runner.hpp"

#include <cstdio>
#include <deque>
#include <limits>
#include <ostream>

#include <json.hpp>

namespace fw {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string format_ts(double ts) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", ts);
  return buf;
}

}  // namespace

std::string alert_json(const Alert& alert) {
  ordered_json j;
  j["type"] = "alert";
  j["switch"] = alert.switch_id;
  j["dst"] = addr_hex(alert.dst_addr);
  j["count"] = alert.count;
  j["window"] = alert.window_index;
  j["ts"] = alert.timestamp_s;
  return j.dump();
}

std::string install_json(const InstallRuleCommand& cmd) {
  ordered_json j;
  j["type"] = "install";
  j["switch"] = cmd.switch_id;
  j["table"] = cmd.table;
  j["key"] = addr_hex(cmd.key);
  j["action"] = "drop";
  return j.dump();
}

std::string read_counters_json(const ReadCountersCommand& cmd) {
  ordered_json j;
  j["type"] = "read_counters";
  j["switch"] = cmd.switch_id;
  j["counter"] = cmd.counter;
  return j.dump();
}

std::string RunReport::to_json() const {
  ordered_json j;
  j["packets_in"] = packets_in;
  j["forwarded"] = forwarded;
  j["dropped"] = dropped;
  j["parse_failures"] = parse_failures;
  j["alerts"] = ordered_json::array();
  for (const Alert& a : alerts) {
    ordered_json e;
    e["switch"] = a.switch_id;
    e["dst"] = addr_hex(a.dst_addr);
    e["count"] = a.count;
    e["window"] = a.window_index;
    e["ts"] = a.timestamp_s;
    j["alerts"].push_back(std::move(e));
  }
  j["rules_installed"] = ordered_json::array();
  for (const InstalledRule& r : rules_installed) {
    ordered_json e;
    e["switch"] = r.switch_id;
    e["table"] = r.table;
    e["key"] = addr_hex(r.key);
    e["action"] = r.action;
    e["ts"] = r.ts;
    e["forwarded_to_key_at_install"] = r.forwarded_to_key_at_install;
    j["rules_installed"].push_back(std::move(e));
  }
  j["per_dst_counts"] = ordered_json::object();
  for (const auto& [dst, n] : per_dst_counts) j["per_dst_counts"][addr_hex(dst)] = n;
  j["counters"] = ordered_json::array();
  for (const CounterSnapshotEntry& c : final_counters) {
    ordered_json e;
    e["key"] = to_hex(c.key, 16);
    e["count"] = c.count;
    e["window_index"] = c.window_index;
    j["counters"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string counters_csv(const std::vector<CounterSnapshotEntry>& entries) {
  std::string out = "key_hex,count,window_index\n";
  for (const CounterSnapshotEntry& e : entries) {
    out += to_hex(e.key, 16);
    out += ',';
    out += std::to_string(e.count);
    out += ',';
    out += std::to_string(e.window_index);
    out += '\n';
  }
  return out;
}

namespace {

struct PendingInstall {
  double apply_at = 0.0;
  InstallRuleCommand cmd;
};

class RunDriver {
 public:
  RunDriver(const ProfileConfig& profile, const RunOptions& options)
      : options_(options),
        profile_(profile),
        sw_(make_switch(options.switch_id, profile)),
        controller_(options.controller) {
    controller_.register_switch(sw_.id, &sw_);
  }

  RunReport run(const std::vector<PacketRecord>& records) {
    log_line("# floodwatch run: switch=" + sw_.id + " packets=" +
             std::to_string(records.size()) + " theta=" + std::to_string(profile_.theta) +
             " window_s=" + format_ts(profile_.window_s) +
             (options_.mitigation ? "" : " (mitigation off)"));

    for (const PacketRecord& rec : records) {
      apply_due_installs(rec.timestamp_s);
      process_one(rec);
    }
    // Commands raised by the tail of the stream still take effect.
    apply_due_installs(std::numeric_limits<double>::infinity());

    ReadCountersCommand poll{sw_.id, std::string(kDstCounter)};
    log_line(read_counters_json(poll));
    report_.final_counters = controller_.poll_counters(poll.switch_id, poll.counter).entries;

    log_line("# run complete: in=" + std::to_string(report_.packets_in) +
             " forwarded=" + std::to_string(report_.forwarded) +
             " dropped=" + std::to_string(report_.dropped) +
             " parse_failures=" + std::to_string(report_.parse_failures) +
             " alerts=" + std::to_string(report_.alerts.size()) +
             " rules=" + std::to_string(report_.rules_installed.size()));

    if (report_.forwarded + report_.dropped != report_.packets_in)
      throw std::logic_error("run invariant violated: forwarded + dropped != packets_in");
    return std::move(report_);
  }

 private:
  void log_line(const std::string& line) {
    if (options_.log) *options_.log << line << '\n';
  }

  void apply_due_installs(double now) {
    while (!pending_.empty() && pending_.front().apply_at <= now) {
      InstallRuleCommand cmd = std::move(pending_.front().cmd);
      double at = pending_.front().apply_at;
      pending_.pop_front();
      install_entry(sw_, cmd.table, u128{cmd.key}, ActDrop{});
      InstalledRule rule;
      rule.ts = at;
      rule.switch_id = cmd.switch_id;
      rule.table = cmd.table;
      rule.key = cmd.key;
      rule.forwarded_to_key_at_install = report_.per_dst_counts[cmd.key];
      report_.rules_installed.push_back(rule);
      log_line("# rule applied at t=" + format_ts(at) + ": " + cmd.table + "[" +
               addr_hex(cmd.key) + "] <- drop");
    }
  }

  void process_one(const PacketRecord& rec) {
    PacketMeta meta;
    meta.timestamp_s = rec.timestamp_s;
    ProcessResult result = process_packet(sw_, rec.raw_bytes, meta);

    ++report_.packets_in;
    bool forwarded = result.verdict.kind != PacketVerdict::Kind::Drop;
    if (forwarded)
      ++report_.forwarded;
    else
      ++report_.dropped;

    if (forwarded && result.parsed) {
      const HeaderInstance* sixlo = result.parsed->find_header(kSixLowpanHeader);
      if (sixlo != nullptr && classify_hello(*result.parsed, profile_)) {
        auto dst = static_cast<std::uint64_t>(sixlo->get_field("dst"));
        if (dst != kBroadcastAddr) ++report_.per_dst_counts[dst];
      }
    }

    for (const ControllerEvent& event : result.verdict.events) {
      if (const Alert* alert = std::get_if<Alert>(&event)) {
        log_line(alert_json(*alert));
        report_.alerts.push_back(*alert);
      } else if (std::holds_alternative<ParseFailed>(event)) {
        ++report_.parse_failures;
      }
      for (SouthboundCommand& cmd : controller_.handle_event(event)) {
        if (auto* install = std::get_if<InstallRuleCommand>(&cmd)) {
          if (!options_.mitigation) continue;
          log_line(install_json(*install));
          pending_.push_back(
              {rec.timestamp_s + controller_.config().propagation_delay_s, std::move(*install)});
        }
      }
    }
  }

  RunOptions options_;
  ProfileConfig profile_;
  SwitchState sw_;
  Controller controller_;
  std::deque<PendingInstall> pending_;
  RunReport report_;
};

}  // namespace

RunReport run_records(const std::vector<PacketRecord>& records, const ProfileConfig& profile,
                      const RunOptions& options) {
  RunDriver driver(profile, options);
  return driver.run(records);
}

RunReport run_scenario(const ScenarioConfig& scenario, const RunOptions& options) {
  return run_records(generate(scenario), scenario.profile, options);
}

}  // namespace fw
