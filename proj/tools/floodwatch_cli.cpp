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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "floodwatch/config_json.hpp"
#include "floodwatch/pcap_io.hpp"
#include "floodwatch/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInternalError = 2;

struct ProfileFlags {
  std::optional<std::uint64_t> theta;
  std::optional<double> window_s;
  std::optional<std::string> zep_proto_id;
  std::optional<std::string> hello_type;
  std::optional<std::uint64_t> counter_capacity;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--theta", theta, "Alert threshold (packets per window)");
    cmd.add_option("--window", window_s, "Detection window in seconds");
    cmd.add_option("--zep-proto-id", zep_proto_id, "ZEP protocol id gate (e.g. 0x4558)");
    cmd.add_option("--hello-type", hello_type, "HELLO message type byte (e.g. 0x01)");
    cmd.add_option("--capacity", counter_capacity, "Counter/table capacity");
  }

  fw::ProfileConfig apply(fw::ProfileConfig base) const {
    if (theta) base.theta = *theta;
    if (window_s) base.window_s = *window_s;
    if (zep_proto_id)
      base.zep_proto_id = static_cast<std::uint16_t>(fw::parse_u64(*zep_proto_id));
    if (hello_type)
      base.hello_msg_type = static_cast<std::uint8_t>(fw::parse_u64(*hello_type));
    if (counter_capacity) base.counter_capacity = static_cast<std::size_t>(*counter_capacity);
    return base;
  }
};

struct ControlFlags {
  std::uint64_t confirm_k = 1;
  double delay_s = 0.0;
  bool no_mitigate = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--confirm-k", confirm_k, "Alert windows required before flagging");
    cmd.add_option("--delay", delay_s, "Install propagation delay in seconds");
    cmd.add_flag("--no-mitigate", no_mitigate, "Detect only; never install drop rules");
  }

  fw::RunOptions options() const {
    fw::RunOptions opt;
    opt.controller.confirm_k = static_cast<std::size_t>(confirm_k);
    opt.controller.propagation_delay_s = delay_s;
    opt.mitigation = !no_mitigate;
    return opt;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::trunc);
  if (!f)
    throw fw::Error(fw::Errc::IoFailure, "cannot open '" + path + "' for writing");
  f << content;
}

void emit_outputs(const fw::RunReport& report, const std::string& report_path,
                  const std::string& counters_path) {
  if (!report_path.empty())
    write_file(report_path, report.to_json() + "\n");
  if (!counters_path.empty())
    write_file(counters_path, fw::counters_csv(report.final_counters));
  std::cout << report.to_json() << std::endl;
}

int cmd_simulate(const std::string& scenario_path, const std::string& pcap_out,
                 const std::string& report_out, const std::string& counters_out,
                 const std::string& log_out, std::optional<std::uint64_t> seed,
                 const ProfileFlags& pf, const ControlFlags& cf) {
  fw::ScenarioConfig scenario = fw::load_scenario_file(scenario_path);
  if (seed) scenario.seed = *seed;
  scenario.profile = pf.apply(scenario.profile);

  std::vector<fw::PacketRecord> records = fw::generate(scenario);
  if (!pcap_out.empty()) fw::write_pcap(pcap_out, records);

  std::ofstream log_file;
  fw::RunOptions options = cf.options();
  if (!log_out.empty()) {
    log_file.open(log_out, std::ios::trunc);
    if (!log_file)
      throw fw::Error(fw::Errc::IoFailure, "cannot open '" + log_out + "' for writing");
    options.log = &log_file;
  } else {
    options.log = &std::cerr;
  }

  fw::RunReport report = fw::run_records(records, scenario.profile, options);
  emit_outputs(report, report_out, counters_out);
  return kExitOk;
}

int cmd_replay(const std::string& pcap_path, const std::string& report_out,
               const std::string& counters_out, const std::string& log_out,
               const ProfileFlags& pf, const ControlFlags& cf) {
  std::vector<fw::PacketRecord> records = fw::read_pcap(pcap_path);
  fw::ProfileConfig profile = pf.apply({});

  std::ofstream log_file;
  fw::RunOptions options = cf.options();
  if (!log_out.empty()) {
    log_file.open(log_out, std::ios::trunc);
    if (!log_file)
      throw fw::Error(fw::Errc::IoFailure, "cannot open '" + log_out + "' for writing");
    options.log = &log_file;
  } else {
    options.log = &std::cerr;
  }

  fw::RunReport report = fw::run_records(records, profile, options);
  emit_outputs(report, report_out, counters_out);
  return kExitOk;
}

int cmd_inspect(const std::string& pcap_path, const std::vector<std::string>& schema_paths,
                const std::string& graph_path, std::uint64_t limit, const ProfileFlags& pf) {
  fw::ProfileConfig profile = pf.apply({});
  fw::SchemaSet schemas = fw::build_schema_set();
  fw::ParseGraph graph = fw::build_parse_graph(profile);

  for (const std::string& path : schema_paths)
    for (fw::HeaderDefPtr& def : fw::load_schema_file(path)) schemas.add(std::move(def));
  if (!graph_path.empty()) graph = fw::load_graph_file(graph_path);

  auto violations = fw::validate_graph(graph, schemas);
  if (!violations.empty()) {
    for (const auto& v : violations)
      std::cerr << "graph violation: " << v.kind << ": " << v.detail << "\n";
    return kExitInputError;
  }

  std::vector<fw::PacketRecord> records = fw::read_pcap(pcap_path);
  std::uint64_t shown = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (limit > 0 && shown >= limit) break;
    ++shown;
    const fw::PacketRecord& rec = records[i];
    fw::PacketMeta meta;
    meta.timestamp_s = rec.timestamp_s;
    fw::ParseResult result = fw::parse(graph, schemas, rec.raw_bytes, meta);

    std::cout << "frame " << i << " t=" << rec.timestamp_s << " len=" << rec.raw_bytes.size();
    if (const fw::ParseError* err = std::get_if<fw::ParseError>(&result)) {
      std::cout << " PARSE-ERROR " << fw::parse_error_name(err->kind) << " at '"
                << err->at_state << "' offset " << err->offset_bytes << "\n";
      continue;
    }
    const fw::ParsedPacket& pkt = std::get<fw::ParsedPacket>(result);
    std::cout << "\n";
    for (const fw::HeaderInstance& h : pkt.headers) {
      std::cout << "  " << h.def->name() << " {";
      const auto& fields = h.def->fields();
      for (std::size_t k = 0; k < fields.size(); ++k) {
        std::cout << (k ? ", " : " ") << fields[k].name << "="
                  << fw::to_hex(h.values[k], (fields[k].width_bits + 3) / 4);
      }
      std::cout << " }\n";
    }
    std::cout << "  payload " << pkt.payload.size() << " byte(s)\n";
  }
  std::cout << "# " << records.size() << " frame(s) total\n";
  return kExitOk;
}

int cmd_validate(const std::string& scenario_path) {
  fw::ScenarioConfig scenario = fw::load_scenario_file(scenario_path);
  scenario.validate();

  // Sanity-check the profile the scenario implies, graph included.
  fw::Profile profile = fw::build_profile(scenario.profile);
  auto violations = fw::validate_graph(profile.graph, profile.schemas);
  if (!violations.empty()) {
    for (const auto& v : violations)
      std::cerr << "graph violation: " << v.kind << ": " << v.detail << "\n";
    return kExitInputError;
  }
  std::cout << "scenario ok: " << scenario.nodes.size() << " node(s), duration "
            << scenario.duration_s << " s, attack "
            << fw::attack_mode_name(scenario.attack.mode) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Software dataplane engine and HELLO-flood attack simulator for "
               "6LoWPAN sensor networks"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Generate a scenario and run it through the switch");
  std::string sim_scenario, sim_pcap, sim_report, sim_counters, sim_log;
  std::optional<std::uint64_t> sim_seed;
  ProfileFlags sim_pf;
  ControlFlags sim_cf;
  sim->add_option("--scenario", sim_scenario, "Scenario JSON file")->required();
  sim->add_option("--pcap", sim_pcap, "Write generated frames to this pcap file");
  sim->add_option("--report", sim_report, "Write the run report JSON here");
  sim->add_option("--counters", sim_counters, "Write the final counter CSV here");
  sim->add_option("--log", sim_log, "Write the southbound log here (default: stderr)");
  sim->add_option("--seed", sim_seed, "Override the scenario seed");
  sim_pf.add_to(*sim);
  sim_cf.add_to(*sim);

  // replay
  auto* rep = app.add_subcommand("replay", "Run frames from a pcap through the switch");
  std::string rep_pcap, rep_report, rep_counters, rep_log;
  ProfileFlags rep_pf;
  ControlFlags rep_cf;
  rep->add_option("--pcap", rep_pcap, "Input pcap file")->required();
  rep->add_option("--report", rep_report, "Write the run report JSON here");
  rep->add_option("--counters", rep_counters, "Write the final counter CSV here");
  rep->add_option("--log", rep_log, "Write the southbound log here (default: stderr)");
  rep_pf.add_to(*rep);
  rep_cf.add_to(*rep);

  // inspect
  auto* ins = app.add_subcommand("inspect", "Parse and dump every frame of a pcap");
  std::string ins_pcap, ins_graph;
  std::vector<std::string> ins_schemas;
  std::uint64_t ins_limit = 0;
  ProfileFlags ins_pf;
  ins->add_option("--pcap", ins_pcap, "Input pcap file")->required();
  ins->add_option("--schema", ins_schemas, "Extra header schema JSON file (repeatable)");
  ins->add_option("--graph", ins_graph, "Replacement parse graph JSON file");
  ins->add_option("--limit", ins_limit, "Dump at most N frames (0 = all)");
  ins_pf.add_to(*ins);

  // validate
  auto* val = app.add_subcommand("validate", "Check a scenario file without running it");
  std::string val_scenario;
  val->add_option("--scenario", val_scenario, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (sim->parsed())
      return cmd_simulate(sim_scenario, sim_pcap, sim_report, sim_counters, sim_log, sim_seed,
                          sim_pf, sim_cf);
    if (rep->parsed())
      return cmd_replay(rep_pcap, rep_report, rep_counters, rep_log, rep_pf, rep_cf);
    if (ins->parsed())
      return cmd_inspect(ins_pcap, ins_schemas, ins_graph, ins_limit, ins_pf);
    if (val->parsed())
      return cmd_validate(val_scenario);
  } catch (const fw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}
