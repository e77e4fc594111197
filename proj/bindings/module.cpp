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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "floodwatch/config_json.hpp"
#include "floodwatch/pcap_io.hpp"
#include "floodwatch/runner.hpp"

namespace py = pybind11;

namespace {

py::object u128_to_py(fw::u128 v) {
  if (v <= fw::u128{~std::uint64_t{0}})
    return py::int_(static_cast<std::uint64_t>(v));
  PyObject* obj = PyLong_FromString(fw::to_hex(v).c_str(), nullptr, 0);
  return py::reinterpret_steal<py::object>(obj);
}

py::bytes to_py_bytes(const std::vector<std::uint8_t>& v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()),
                   static_cast<py::ssize_t>(v.size()));
}

std::vector<std::uint8_t> from_py_bytes(const py::bytes& b) {
  std::string s = b;
  return {s.begin(), s.end()};
}

py::dict parsed_to_dict(const fw::ParsedPacket& pkt) {
  py::dict out;
  py::list headers;
  for (const fw::HeaderInstance& h : pkt.headers) {
    py::dict fields;
    for (std::size_t i = 0; i < h.def->fields().size(); ++i)
      fields[py::str(h.def->fields()[i].name)] = u128_to_py(h.values[i]);
    py::dict hd;
    hd["name"] = h.def->name();
    hd["fields"] = fields;
    headers.append(hd);
  }
  out["headers"] = headers;
  out["payload"] = to_py_bytes(pkt.payload);
  out["timestamp_s"] = pkt.meta.timestamp_s;
  return out;
}

// One profile switch plus its event history, for scripted experiments.
class PySwitch {
 public:
  PySwitch(const fw::ProfileConfig& config, const std::string& id)
      : sw_(fw::make_switch(id, config)) {}

  py::dict process(const py::bytes& frame, double ts) {
    fw::PacketMeta meta;
    meta.timestamp_s = ts;
    fw::ProcessResult r = fw::process_packet(sw_, from_py_bytes(frame), meta);

    py::dict out;
    out["verdict"] = std::string(fw::verdict_name(r.verdict.kind));
    out["egress_port"] = r.verdict.egress_port;
    out["output"] = r.output ? py::object(to_py_bytes(*r.output)) : py::object(py::none());
    out["parsed"] = r.parsed ? py::object(parsed_to_dict(*r.parsed)) : py::object(py::none());
    py::list alerts;
    for (const fw::ControllerEvent& e : r.verdict.events)
      if (const fw::Alert* a = std::get_if<fw::Alert>(&e)) alerts.append(*a);
    out["alerts"] = alerts;
    return out;
  }

  void install_drop(std::uint64_t dst) {
    fw::install_entry(sw_, std::string(fw::kBlocklistTable), fw::u128{dst}, fw::ActDrop{});
  }

  py::list counters() {
    py::list out;
    for (const fw::CounterSnapshotEntry& e :
         fw::read_counters(sw_, std::string(fw::kDstCounter)))
      out.append(py::make_tuple(u128_to_py(e.key), e.count, e.window_index));
    return out;
  }

 private:
  fw::SwitchState sw_;
};

fw::RunOptions make_options(bool mitigation, std::size_t confirm_k, double delay_s) {
  fw::RunOptions opt;
  opt.mitigation = mitigation;
  opt.controller.confirm_k = confirm_k;
  opt.controller.propagation_delay_s = delay_s;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Software dataplane engine and HELLO-flood attack simulator";

  m.attr("BROADCAST_ADDR") = fw::kBroadcastAddr;
  m.attr("MIN_FRAME_BYTES") = fw::kMinFrameBytes;
  m.attr("PCAP_LINKTYPE") = fw::kPcapLinktype;
  m.attr("ZEP_PROTO_ID_EX") = fw::kZepProtoIdEx;
  m.attr("ZEP_PROTO_ID_ALT") = fw::kZepProtoIdAlt;

  py::register_exception<fw::Error>(m, "FloodwatchError");

  py::class_<fw::SplitMix64>(m, "SplitMix64")
      .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
      .def("next", &fw::SplitMix64::next)
      .def("u01", &fw::SplitMix64::u01);

  py::class_<fw::ProfileConfig>(m, "ProfileConfig")
      .def(py::init<>())
      .def_readwrite("zep_proto_id", &fw::ProfileConfig::zep_proto_id)
      .def_readwrite("hello_msg_type", &fw::ProfileConfig::hello_msg_type)
      .def_readwrite("theta", &fw::ProfileConfig::theta)
      .def_readwrite("window_s", &fw::ProfileConfig::window_s)
      .def_readwrite("counter_capacity", &fw::ProfileConfig::counter_capacity);

  py::enum_<fw::NodeRole>(m, "NodeRole")
      .value("LEGIT", fw::NodeRole::Legit)
      .value("ATTACKER", fw::NodeRole::Attacker)
      .value("BASESTATION", fw::NodeRole::Basestation);

  py::enum_<fw::AttackMode>(m, "AttackMode")
      .value("NONE", fw::AttackMode::None)
      .value("REPLY_FLOOD", fw::AttackMode::ReplyFlood)
      .value("DIRECT_FLOOD", fw::AttackMode::DirectFlood);

  py::class_<fw::NodeSpec>(m, "NodeSpec")
      .def(py::init([](const std::string& id, std::uint64_t addr, fw::NodeRole role,
                       double hello_rate_hz) {
             return fw::NodeSpec{id, addr, role, hello_rate_hz};
           }),
           py::arg("id"), py::arg("addr"), py::arg("role") = fw::NodeRole::Legit,
           py::arg("hello_rate_hz") = 0.0)
      .def_readwrite("id", &fw::NodeSpec::id)
      .def_readwrite("addr", &fw::NodeSpec::addr)
      .def_readwrite("role", &fw::NodeSpec::role)
      .def_readwrite("hello_rate_hz", &fw::NodeSpec::hello_rate_hz);

  py::class_<fw::AttackSpec>(m, "AttackSpec")
      .def(py::init<>())
      .def_readwrite("mode", &fw::AttackSpec::mode)
      .def_readwrite("flood_rate_hz", &fw::AttackSpec::flood_rate_hz)
      .def_readwrite("start_s", &fw::AttackSpec::start_s)
      .def_readwrite("target", &fw::AttackSpec::target);

  py::class_<fw::ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("duration_s", &fw::ScenarioConfig::duration_s)
      .def_readwrite("seed", &fw::ScenarioConfig::seed)
      .def_readwrite("nodes", &fw::ScenarioConfig::nodes)
      .def_readwrite("attack", &fw::ScenarioConfig::attack)
      .def_readwrite("reply_delay_s", &fw::ScenarioConfig::reply_delay_s)
      .def_readwrite("profile", &fw::ScenarioConfig::profile)
      .def("validate", &fw::ScenarioConfig::validate);

  py::class_<fw::PacketRecord>(m, "PacketRecord")
      .def(py::init([](double ts, const py::bytes& raw, const std::string& src,
                       const std::string& note) {
             return fw::PacketRecord{ts, from_py_bytes(raw), src, note};
           }),
           py::arg("timestamp_s"), py::arg("raw_bytes"), py::arg("src_node_id") = "",
           py::arg("note") = "")
      .def_readwrite("timestamp_s", &fw::PacketRecord::timestamp_s)
      .def_property(
          "raw_bytes",
          [](const fw::PacketRecord& r) { return to_py_bytes(r.raw_bytes); },
          [](fw::PacketRecord& r, const py::bytes& b) { r.raw_bytes = from_py_bytes(b); })
      .def_readwrite("src_node_id", &fw::PacketRecord::src_node_id)
      .def_readwrite("note", &fw::PacketRecord::note);

  py::class_<fw::Alert>(m, "Alert")
      .def_readonly("switch_id", &fw::Alert::switch_id)
      .def_readonly("dst_addr", &fw::Alert::dst_addr)
      .def_readonly("count", &fw::Alert::count)
      .def_readonly("window_index", &fw::Alert::window_index)
      .def_readonly("timestamp_s", &fw::Alert::timestamp_s)
      .def("__repr__", [](const fw::Alert& a) {
        return "Alert(dst=" + fw::addr_hex(a.dst_addr) + ", count=" + std::to_string(a.count) +
               ", window=" + std::to_string(a.window_index) + ")";
      });

  py::class_<fw::InstalledRule>(m, "InstalledRule")
      .def_readonly("ts", &fw::InstalledRule::ts)
      .def_readonly("switch_id", &fw::InstalledRule::switch_id)
      .def_readonly("table", &fw::InstalledRule::table)
      .def_readonly("key", &fw::InstalledRule::key)
      .def_readonly("action", &fw::InstalledRule::action)
      .def_readonly("forwarded_to_key_at_install",
                    &fw::InstalledRule::forwarded_to_key_at_install);

  py::class_<fw::RunReport>(m, "RunReport")
      .def_readonly("packets_in", &fw::RunReport::packets_in)
      .def_readonly("forwarded", &fw::RunReport::forwarded)
      .def_readonly("dropped", &fw::RunReport::dropped)
      .def_readonly("parse_failures", &fw::RunReport::parse_failures)
      .def_readonly("alerts", &fw::RunReport::alerts)
      .def_readonly("rules_installed", &fw::RunReport::rules_installed)
      .def_readonly("per_dst_counts", &fw::RunReport::per_dst_counts)
      .def("to_json", &fw::RunReport::to_json);

  py::class_<PySwitch>(m, "Switch")
      .def(py::init<const fw::ProfileConfig&, const std::string&>(),
           py::arg("config") = fw::ProfileConfig{}, py::arg("id") = "s1")
      .def("process", &PySwitch::process, py::arg("frame"), py::arg("ts") = 0.0)
      .def("install_drop", &PySwitch::install_drop, py::arg("dst"))
      .def("counters", &PySwitch::counters);

  m.def(
      "make_hello_frame",
      [](const fw::ProfileConfig& config, std::uint64_t src, std::uint64_t dst,
         std::uint32_t seq) {
        return to_py_bytes(fw::make_hello_frame(config, src, dst, seq));
      },
      py::arg("config"), py::arg("src_addr"), py::arg("dst_addr"), py::arg("seq") = 0);

  m.def(
      "parse_frame",
      [](const py::bytes& frame, const fw::ProfileConfig& config) -> py::object {
        fw::Profile p = fw::build_profile(config);
        fw::ParseResult r = fw::parse(p.graph, p.schemas, from_py_bytes(frame), {});
        if (const fw::ParseError* err = std::get_if<fw::ParseError>(&r)) {
          py::dict out;
          out["error"] = std::string(fw::parse_error_name(err->kind));
          out["at_state"] = err->at_state;
          out["offset_bytes"] = err->offset_bytes;
          return out;
        }
        return parsed_to_dict(std::get<fw::ParsedPacket>(r));
      },
      py::arg("frame"), py::arg("config") = fw::ProfileConfig{});

  m.def("generate", &fw::generate, py::arg("scenario"));

  m.def(
      "run_scenario",
      [](const fw::ScenarioConfig& scenario, bool mitigation, std::size_t confirm_k,
         double delay_s) {
        return fw::run_scenario(scenario, make_options(mitigation, confirm_k, delay_s));
      },
      py::arg("scenario"), py::arg("mitigation") = true, py::arg("confirm_k") = 1,
      py::arg("delay_s") = 0.0);

  m.def(
      "run_records",
      [](const std::vector<fw::PacketRecord>& records, const fw::ProfileConfig& profile,
         bool mitigation, std::size_t confirm_k, double delay_s) {
        return fw::run_records(records, profile, make_options(mitigation, confirm_k, delay_s));
      },
      py::arg("records"), py::arg("profile") = fw::ProfileConfig{}, py::arg("mitigation") = true,
      py::arg("confirm_k") = 1, py::arg("delay_s") = 0.0);

  m.def("write_pcap", &fw::write_pcap, py::arg("path"), py::arg("records"));
  m.def("read_pcap", &fw::read_pcap, py::arg("path"));

  m.def("load_scenario_json", &fw::parse_scenario_json, py::arg("text"));
  m.def("load_scenario_file", &fw::load_scenario_file, py::arg("path"));
}
